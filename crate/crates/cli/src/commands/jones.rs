use std::f64::consts::PI;

use jonesvol_core::braid::parse_braid;
use jonesvol_core::invariants::{colored_jones, quantum_dimension_vanishes, tangle_scalar};
use jonesvol_core::tensorq::{ColorDim, QExponent};
use jonesvol_core::Complex64;

use super::Rendered;
use crate::args::JonesArgs;
use crate::error::{guard_state_space, CliError};
use crate::report::{document, Obj};

pub fn run(args: &JonesArgs) -> Result<Rendered, CliError> {
    let braid = parse_braid(&args.braid, args.strands)?;
    let n = ColorDim::new(args.color)?;
    guard_state_space(n.get(), braid.strands())?;

    let (q, q_input) = match (args.point.root, args.point.h, args.point.theta) {
        (Some(m), _, _) => (QExponent::root_of_unity(m)?, Obj::new().set("root", m as u64)),
        (_, Some(h), _) => (QExponent::new(h)?, Obj::new().c("h", h)),
        (_, _, Some(t)) => (QExponent::from_theta(t, n.get())?, Obj::new().c("theta", t)),
        _ => return Err(CliError::Input("one of --root, --h, --theta is required".into())),
    };

    // The tangle scalar needs no division by {N}; prefer it at roots of unity.
    let at_root = args.point.root.is_some();
    let value = if braid.is_knot() && (at_root || quantum_dimension_vanishes(n, q)) {
        tangle_scalar(&braid, n, q)?
    } else {
        colored_jones(&braid, n, q)?
    };

    let inputs = Obj::new()
        .set("braid", braid.to_string())
        .set("strands", braid.strands() as u64)
        .set("color", n.get() as u64)
        .set("q", q_input);
    let outputs = Obj::new()
        .c("value", value.value)
        .set("method", value.method.name())
        .c("h", q.h())
        .c("q", q.q());
    let diagnostics = Obj::new()
        .set("components", braid.components() as u64)
        .set("writhe", braid.writhe())
        .f("h_over_2pi_i", (q.h() / Complex64::new(0.0, 2.0 * PI)).re);
    Ok(Rendered::doc(document("jones", inputs, outputs, diagnostics)))
}
