use clap::{Args, Parser, Subcommand, ValueEnum};
use jonesvol_core::Complex64;

#[derive(Debug, Parser)]
#[command(name = "jonesvol", version, about = "Colored Jones polynomials and the volume conjecture")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true, env = "JONESVOL_THREADS")]
    pub threads: Option<usize>,

    /// Print wall-clock timings to stderr.
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the colored Jones polynomial J_N of a braid closure.
    Jones(JonesArgs),
    /// Sweep 2π·log|J_N(e^{2πi/N})|/N over N and extrapolate.
    VolumeLimit(VolumeLimitArgs),
    /// Deformed hyperbolic structure of the figure-eight complement at u.
    Deform(DeformArgs),
    /// Run an invariant suite and report residuals.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct JonesArgs {
    /// Braid word, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,

    /// Strand count (default: largest index + 1).
    #[arg(long)]
    pub strands: Option<usize>,

    /// Color N = dim V.
    #[arg(long)]
    pub color: usize,

    #[command(flatten)]
    pub point: QPoint,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct QPoint {
    /// q = e^{2πi/M}.
    #[arg(long)]
    pub root: Option<usize>,

    /// q = e^h, given as re,im.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub h: Option<Complex64>,

    /// q = e^{θ/N}, given as re,im.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub theta: Option<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Knot {
    Fig8,
}

#[derive(Debug, Args)]
pub struct VolumeLimitArgs {
    /// Named knot evaluated by a closed form.
    #[arg(long, conflicts_with = "braid", required_unless_present = "braid")]
    pub knot: Option<Knot>,

    /// Knot given as a braid closure (state sum).
    #[arg(long, allow_hyphen_values = true)]
    pub braid: Option<String>,

    /// Strand count for --braid.
    #[arg(long, requires = "braid")]
    pub strands: Option<usize>,

    /// Colors as a:b or a:b:step (inclusive).
    #[arg(long, value_parser = parse_range)]
    pub n: ColorRange,

    /// Fit window a:b (default: the top decade of computed N).
    #[arg(long, value_parser = parse_window)]
    pub fit: Option<(usize, usize)>,
}

#[derive(Debug, Args)]
pub struct DeformArgs {
    /// Meridian parameter u as re,im.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub u: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Yb,
    Markov,
    Skein,
    Lobachevsky,
    Dilog,
    Fig8Formulas,
    Alexander,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub suite: Suite,

    /// Largest color for suites that sweep N.
    #[arg(long)]
    pub color_max: Option<usize>,

    /// Number of sample points (q values, θ values, braids, …).
    #[arg(long)]
    pub samples: Option<usize>,

    /// Seed for randomized suites.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

/// Inclusive arithmetic progression of colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorRange {
    pub start: usize,
    pub end: usize,
    pub step: usize,
}

impl ColorRange {
    pub fn values(self) -> Vec<usize> {
        (self.start..=self.end).step_by(self.step).collect()
    }
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("`{t}` is not a number"));
    let z = match parts.as_slice() {
        [re] => Complex64::new(num(re)?, 0.0),
        [re, im] => Complex64::new(num(re)?, num(im)?),
        _ => return Err(format!("expected re,im but got `{s}`")),
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(z)
}

fn parse_positive(t: &str) -> Result<usize, String> {
    match t.trim().parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("`{t}` is not a positive integer")),
        Ok(v) => Ok(v),
    }
}

pub fn parse_range(s: &str) -> Result<ColorRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let (start, end, step) = match parts.as_slice() {
        [a, b] => (parse_positive(a)?, parse_positive(b)?, 1),
        [a, b, c] => (parse_positive(a)?, parse_positive(b)?, parse_positive(c)?),
        _ => return Err(format!("expected a:b or a:b:step but got `{s}`")),
    };
    if start > end {
        return Err(format!("empty range `{s}`"));
    }
    Ok(ColorRange { start, end, step })
}

pub fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let r = parse_range(s)?;
    if r.step != 1 {
        return Err("a fit window takes no step".to_string());
    }
    Ok((r.start, r.end))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_values() {
        assert_eq!(parse_complex("0.1,-2").unwrap(), Complex64::new(0.1, -2.0));
        assert_eq!(parse_complex("3").unwrap(), Complex64::new(3.0, 0.0));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("a,1").is_err());
        assert!(parse_complex("inf,0").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2:10:4").unwrap().values(), vec![2, 6, 10]);
        assert_eq!(parse_range("5:5").unwrap().values(), vec![5]);
        assert!(parse_range("0:5").is_err());
        assert!(parse_range("6:5").is_err());
        assert!(parse_range("1:5:0").is_err());
        assert!(parse_window("1:5:2").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
