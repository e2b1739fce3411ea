use alloc::vec::Vec;

use num_complex::Complex64;

use super::rmatrix::RMatrixTable;
use crate::braid::{BraidWord, Sign};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn checked_pow(d: usize, rank: usize) -> Result<usize> {
    let mut total: usize = 1;
    for _ in 0..rank {
        total = total
            .checked_mul(d)
            .ok_or(Error::InvalidArgument("tensor size overflows usize"))?;
    }
    Ok(total)
}

/// Writes `(Id^{⊗(pos−1)} ⊗ R^{±1} ⊗ Id^{⊗(n−pos−1)}) · input` into `out`.
///
/// Only the band of nonzero R entries is visited, so the cost is `O(N^{n+1})`.
fn contract(input: &[Complex64], out: &mut [Complex64], rank: usize, d: usize, pos: usize, sign: Sign, table: &RMatrixTable) {
    let suffix = d.pow((rank - pos - 1) as u32);
    let block = d * d * suffix;
    out.fill(ZERO);
    for base in (0..input.len()).step_by(block) {
        for kl in 0..d * d {
            let (k, l) = (kl / d, kl % d);
            let bands = table.band(sign, k, l);
            let src = base + kl * suffix;
            for s in 0..suffix {
                let x = input[src + s];
                if x == ZERO {
                    continue;
                }
                for e in bands {
                    out[base + e.out * suffix + s] += e.value * x;
                }
            }
        }
    }
}

fn check_pos(pos: usize, rank: usize) -> Result<()> {
    if pos == 0 || pos >= rank {
        Err(Error::GeneratorOutOfRange { index: pos, strands: rank })
    } else {
        Ok(())
    }
}

/// Diagonal entries `Φ(β)[J, J]` for every `J` whose first leg equals
/// `first` (all `J` when `first` is `None`), in increasing order of `J`.
///
/// Each column is evolved separately, so memory stays at two vectors of
/// length `N^n`.
pub(crate) fn braid_diagonal(braid: &BraidWord, table: &RMatrixTable, first: Option<usize>) -> Result<Vec<Complex64>> {
    let rank = braid.strands();
    let d = table.dim().get();
    let size = checked_pow(d, rank)?;
    let range = match first {
        Some(a) => {
            if a >= d {
                return Err(Error::IndexOutOfRange { index: a, bound: d });
            }
            let block = size / d;
            a * block..(a + 1) * block
        }
        None => 0..size,
    };
    let mut cur = alloc::vec![ZERO; size];
    let mut next = alloc::vec![ZERO; size];
    let mut diag = Vec::with_capacity(range.len());
    for col in range {
        cur.fill(ZERO);
        cur[col] = Complex64::new(1.0, 0.0);
        for l in braid.letters().iter().rev() {
            contract(&cur, &mut next, rank, d, l.index, l.sign, table);
            core::mem::swap(&mut cur, &mut next);
        }
        diag.push(cur[col]);
    }
    Ok(diag)
}

/// A vector in `V^{⊗n}`, first leg most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct StateTensor {
    rank: usize,
    dim: usize,
    data: Vec<Complex64>,
}

impl StateTensor {
    pub fn new(rank: usize, dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("tensor dimension must be positive"));
        }
        if data.len() != checked_pow(dim, rank)? {
            return Err(Error::InvalidArgument("tensor data length must be dim^rank"));
        }
        Ok(StateTensor { rank, dim, data })
    }

    pub fn zeros(rank: usize, dim: usize) -> Result<Self> {
        Self::new(rank, dim, alloc::vec![ZERO; checked_pow(dim, rank)?])
    }

    /// The basis vector with flat index `index`.
    pub fn basis(rank: usize, dim: usize, index: usize) -> Result<Self> {
        let mut t = Self::zeros(rank, dim)?;
        if index >= t.data.len() {
            return Err(Error::IndexOutOfRange { index, bound: t.data.len() });
        }
        t.data[index] = Complex64::new(1.0, 0.0);
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    /// Applies the crossing σ_pos^{±1} to legs `pos` and `pos + 1`.
    pub fn apply_crossing(&self, pos: usize, sign: Sign, table: &RMatrixTable) -> Result<StateTensor> {
        check_pos(pos, self.rank)?;
        if table.dim().get() != self.dim {
            return Err(Error::InvalidArgument("R-matrix dimension differs from tensor dimension"));
        }
        let mut out = alloc::vec![ZERO; self.data.len()];
        contract(&self.data, &mut out, self.rank, self.dim, pos, sign, table);
        Ok(StateTensor { rank: self.rank, dim: self.dim, data: out })
    }

    /// Applies `Φ(β)`: the last letter of the word acts first.
    pub fn apply_braid(&self, braid: &BraidWord, table: &RMatrixTable) -> Result<StateTensor> {
        if braid.strands() != self.rank {
            return Err(Error::StrandMismatch { left: braid.strands(), right: self.rank });
        }
        if table.dim().get() != self.dim {
            return Err(Error::InvalidArgument("R-matrix dimension differs from tensor dimension"));
        }
        let mut cur = self.data.clone();
        let mut next = alloc::vec![ZERO; cur.len()];
        for l in braid.letters().iter().rev() {
            contract(&cur, &mut next, self.rank, self.dim, l.index, l.sign, table);
            core::mem::swap(&mut cur, &mut next);
        }
        Ok(StateTensor { rank: self.rank, dim: self.dim, data: cur })
    }
}

/// An endomorphism of `V^{⊗n}`, stored column by column.
///
/// Entry `(row, col)` is the coefficient of basis vector `row` in the image
/// of basis vector `col`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorTensor {
    rank: usize,
    dim: usize,
    size: usize,
    data: Vec<Complex64>,
}

impl OperatorTensor {
    pub fn identity(rank: usize, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("tensor dimension must be positive"));
        }
        let size = checked_pow(dim, rank)?;
        let total = size
            .checked_mul(size)
            .ok_or(Error::InvalidArgument("operator size overflows usize"))?;
        let mut data = alloc::vec![ZERO; total];
        for i in 0..size {
            data[i * size + i] = Complex64::new(1.0, 0.0);
        }
        Ok(OperatorTensor { rank, dim, size, data })
    }

    /// `Φ(β) = Φ(σ_{a_1}) ⋯ Φ(σ_{a_L})`.
    pub fn from_braid(braid: &BraidWord, table: &RMatrixTable) -> Result<Self> {
        let mut op = Self::identity(braid.strands(), table.dim().get())?;
        for l in braid.letters().iter().rev() {
            op = op.apply_crossing(l.index, l.sign, table)?;
        }
        Ok(op)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of rows (and columns), `N^n`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[col * self.size + row]
    }

    /// The scalar held by a rank-0 operator.
    pub fn scalar(&self) -> Option<Complex64> {
        (self.rank == 0).then(|| self.data[0])
    }

    /// Left-multiplies by the crossing σ_pos^{±1}.
    pub fn apply_crossing(&self, pos: usize, sign: Sign, table: &RMatrixTable) -> Result<OperatorTensor> {
        check_pos(pos, self.rank)?;
        if table.dim().get() != self.dim {
            return Err(Error::InvalidArgument("R-matrix dimension differs from tensor dimension"));
        }
        let mut out = alloc::vec![ZERO; self.data.len()];
        for (src, dst) in self.data.chunks(self.size).zip(out.chunks_mut(self.size)) {
            contract(src, dst, self.rank, self.dim, pos, sign, table);
        }
        Ok(OperatorTensor { rank: self.rank, dim: self.dim, size: self.size, data: out })
    }

    /// Right-multiplies by `w^{⊗n}` for a diagonal `w` on V.
    pub fn mul_diagonal(&self, weight: &[Complex64]) -> Result<OperatorTensor> {
        if weight.len() != self.dim {
            return Err(Error::InvalidArgument("weight length must equal the dimension"));
        }
        let mut out = self.clone();
        for col in 0..self.size {
            let mut w = Complex64::new(1.0, 0.0);
            let mut c = col;
            for _ in 0..self.rank {
                w *= weight[c % self.dim];
                c /= self.dim;
            }
            for x in &mut out.data[col * self.size..(col + 1) * self.size] {
                *x *= w;
            }
        }
        Ok(out)
    }

    /// `Tr_n(X · (Id ⊗ w))`: traces out the last leg, optionally weighted.
    pub fn partial_trace_last(&self, weight: Option<&[Complex64]>) -> Result<OperatorTensor> {
        if self.rank == 0 {
            return Err(Error::InvalidArgument("cannot trace a rank-0 operator"));
        }
        if let Some(w) = weight {
            if w.len() != self.dim {
                return Err(Error::InvalidArgument("weight length must equal the dimension"));
            }
        }
        let d = self.dim;
        let size = self.size / d;
        let mut data = alloc::vec![ZERO; size * size];
        for col in 0..size {
            for row in 0..size {
                let mut acc = ZERO;
                for j in 0..d {
                    let x = self.get(row * d + j, col * d + j);
                    acc += match weight {
                        Some(w) => x * w[j],
                        None => x,
                    };
                }
                data[col * size + row] = acc;
            }
        }
        Ok(OperatorTensor { rank: self.rank - 1, dim: d, size, data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::tensorq::{ColorDim, EnhancedYB, QExponent};

    fn table(d: usize, h: (f64, f64)) -> RMatrixTable {
        RMatrixTable::new(ColorDim::new(d).unwrap(), QExponent::new(Complex64::new(h.0, h.1)).unwrap())
    }

    fn pseudo_random(len: usize, seed: u64) -> Vec<Complex64> {
        let mut s = seed;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        (0..len).map(|_| Complex64::new(next(), next())).collect()
    }

    fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn identity_slices_reproduce_r() {
        let t = table(2, (0.2, 0.5));
        let op = OperatorTensor::identity(2, 2).unwrap().apply_crossing(1, Sign::Pos, &t).unwrap();
        let dense = t.dense(Sign::Pos);
        for row in 0..4 {
            for col in 0..4 {
                assert_eq!(op.get(row, col), dense[row * 4 + col]);
            }
        }
    }

    #[test]
    fn crossing_then_inverse_is_identity() {
        for d in 2..=4 {
            let t = table(d, (0.13, -0.7));
            let v = StateTensor::new(3, d, pseudo_random(d * d * d, d as u64)).unwrap();
            for pos in 1..=2 {
                let back = v
                    .apply_crossing(pos, Sign::Pos, &t)
                    .unwrap()
                    .apply_crossing(pos, Sign::Neg, &t)
                    .unwrap();
                assert!(max_diff(back.data(), v.data()) < 1e-12, "d={d} pos={pos}");
            }
        }
    }

    #[test]
    fn braid_relation_on_random_vectors() {
        for d in 2..=4 {
            let t = table(d, (-0.4, 0.9));
            let v = StateTensor::new(3, d, pseudo_random(d.pow(3), 11 + d as u64)).unwrap();
            let lhs = v.apply_braid(&parse_braid("1 2 1", None).unwrap(), &t).unwrap();
            let rhs = v.apply_braid(&parse_braid("2 1 2", None).unwrap(), &t).unwrap();
            assert!(max_diff(lhs.data(), rhs.data()) < 1e-10, "d={d}");
        }
    }

    #[test]
    fn state_and_operator_agree() {
        let t = table(3, (0.3, 0.3));
        let b = parse_braid("1 -2 1 -2", None).unwrap();
        let op = OperatorTensor::from_braid(&b, &t).unwrap();
        for col in [0, 5, 13, 26] {
            let img = StateTensor::basis(3, 3, col).unwrap().apply_braid(&b, &t).unwrap();
            for row in 0..27 {
                assert!((img.data()[row] - op.get(row, col)).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn traces_of_identity() {
        let q = QExponent::new(Complex64::new(0.21, 0.4)).unwrap();
        for d in 1..6 {
            let e = EnhancedYB::new(ColorDim::new(d).unwrap(), q);
            let id = OperatorTensor::identity(1, d).unwrap();
            let plain = id.partial_trace_last(None).unwrap().scalar().unwrap();
            assert!((plain - Complex64::new(d as f64, 0.0)).norm() < 1e-14);
            let weighted = id.partial_trace_last(Some(e.mu())).unwrap().scalar().unwrap();
            let expected = crate::tensorq::qnum(d as i64, q) / crate::tensorq::qnum(1, q);
            assert!((weighted - expected).norm() < 1e-12 * expected.norm());
        }
    }

    #[test]
    fn errors() {
        let t = table(2, (0.1, 0.1));
        let v = StateTensor::zeros(2, 2).unwrap();
        assert!(v.apply_crossing(0, Sign::Pos, &t).is_err());
        assert!(v.apply_crossing(2, Sign::Pos, &t).is_err());
        assert!(StateTensor::new(2, 2, alloc::vec![ZERO; 3]).is_err());
        let scalar = OperatorTensor::identity(0, 2).unwrap();
        assert!(scalar.partial_trace_last(None).is_err());
        let t3 = table(3, (0.1, 0.1));
        assert!(v.apply_crossing(1, Sign::Pos, &t3).is_err());
    }
}
