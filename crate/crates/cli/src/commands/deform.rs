use jonesvol_core::asympt::{dehn_filling, potential_h, vol_cs_combination, DeformationState};
use jonesvol_core::hypgeom::{tetra_volume_shape, ShapeParameter};
use jonesvol_core::{Complex64, Error};
use serde_json::Value;

use super::Rendered;
use crate::args::DeformArgs;
use crate::error::CliError;
use crate::report::{cplx, document, num, Obj};

const FD_STEP: f64 = 1e-5;

pub fn run(args: &DeformArgs) -> Result<Rendered, CliError> {
    let s = DeformationState::new(args.u)?;
    let vol_z = tetra_volume_shape(ShapeParameter::new(s.z)?);
    let vol_w = tetra_volume_shape(ShapeParameter::new(s.w)?);
    let filled = s.filled_volume();

    let (dehn, length, kappa) = match dehn_filling(s.u, s.v) {
        Ok(d) => (
            Obj::new().f("p", d.p).f("q", d.q).into(),
            d.core_length,
            d.kappa.map_or(Value::Null, cplx),
        ),
        // At the cusp u and v vanish together and no filling is defined.
        Err(Error::Singular(_)) => (Value::Null, 0.0, Value::Null),
        Err(e) => return Err(e.into()),
    };
    let vol_cs = vol_cs_combination(s.u)?;

    // Central difference of H along the real direction, when both points
    // stay inside the supported region.
    let derivative = match (potential_h(s.u + FD_STEP), potential_h(s.u - FD_STEP)) {
        (Ok(a), Ok(b)) => num(((a - b) / (2.0 * FD_STEP) - s.log_zz).norm()),
        _ => Value::Null,
    };

    let inputs = Obj::new().c("u", args.u);
    let outputs = Obj::new()
        .set(
            "state",
            Obj::new()
                .c("u", s.u)
                .c("theta", s.theta)
                .c("x", s.x)
                .c("y", s.y)
                .c("log_y", s.log_y)
                .c("z", s.z)
                .c("w", s.w)
                .c("h", s.h)
                .c("dh_du", s.log_zz)
                .c("v", s.v),
        )
        .f("volume", filled)
        .set("tetrahedra", Obj::new().f("z", vol_z).f("w", vol_w))
        .f("core_length", length)
        .set("dehn", dehn)
        .set("kappa", kappa)
        .c("vol_cs", vol_cs);
    let residuals = Obj::new()
        .f("saddle", s.saddle_residual())
        .f("gluing", s.gluing_residual())
        .f("meridian", (s.w * (Complex64::new(1.0, 0.0) - s.z) - s.x).norm())
        .f("saddle_shapes", (-s.z * s.w - s.y).norm())
        .f("volume_identity", (filled - vol_z - vol_w).abs())
        .f("vol_cs_real_part", (vol_cs.re - filled).abs())
        .set("derivative", derivative);
    let diagnostics = Obj::new().set("residuals", residuals);
    Ok(Rendered::doc(document("deform", inputs, outputs, diagnostics)))
}
