use rayon::prelude::*;

use jonesvol_core::asympt::{fit_limit, volume_limit_series, BraidKnot, Fig8Closed, KnotEvaluator, LimitSeries};
use jonesvol_core::braid::parse_braid;
use jonesvol_core::hypgeom::fig8_complete_volume;
use serde_json::Value;

use super::{Rendered, Table};
use crate::args::VolumeLimitArgs;
use crate::error::{guard_state_space, CliError};
use crate::report::{cell, document, num, Obj};

fn sweep<E: KnotEvaluator + Sync>(eval: &E, ns: &[usize]) -> Result<LimitSeries, CliError> {
    let parts: Vec<LimitSeries> = ns
        .par_iter()
        .map(|&n| volume_limit_series(eval, &[n]))
        .collect::<Result<_, _>>()?;
    let mut series = LimitSeries::default();
    for p in parts {
        series.entries.extend(p.entries);
        series.gaps.extend(p.gaps);
    }
    Ok(series)
}

pub fn run(args: &VolumeLimitArgs) -> Result<Rendered, CliError> {
    let ns = args.n.values();
    let n_max = *ns.last().expect("ranges are nonempty");

    let (series, knot) = match &args.braid {
        Some(text) => {
            let braid = parse_braid(text, args.strands)?;
            if !braid.is_knot() {
                return Err(CliError::Math(jonesvol_core::Error::NotAKnot { components: braid.components() }));
            }
            guard_state_space(n_max, braid.strands())?;
            let name = braid.to_string();
            (sweep(&BraidKnot(braid), &ns)?, Obj::new().set("braid", name))
        }
        None => (sweep(&Fig8Closed, &ns)?, Obj::new().set("knot", "fig8")),
    };

    let (lo, hi) = args.fit.unwrap_or((n_max / 10, n_max));
    let in_window = series.entries.iter().filter(|e| e.0 >= lo && e.0 <= hi).count();
    let fit = if in_window >= 3 { Some(fit_limit(&series, Some((lo, hi)))?) } else { None };

    let reference = fig8_complete_volume();
    let rows: Vec<Value> = series
        .entries
        .iter()
        .map(|&(n, v)| Obj::new().set("n", n as u64).f("value", v).into())
        .collect();
    let fit_json: Value = match fit {
        Some(f) => Obj::new()
            .f("a", f.a)
            .f("b", f.b)
            .f("c", f.c)
            .f("rms", f.rms)
            .set("points", f.points as u64)
            .set("window", vec![f.window.0 as u64, f.window.1 as u64])
            .into(),
        None => Value::Null,
    };

    let inputs = knot
        .set("n", Obj::new().set("start", args.n.start as u64).set("end", args.n.end as u64).set("step", args.n.step as u64))
        .set("fit_window", vec![lo as u64, hi as u64]);
    let outputs = Obj::new()
        .set("series", rows)
        .set("gaps", series.gaps.iter().map(|&g| g as u64).collect::<Vec<_>>())
        .set("fit", fit_json);
    let mut diagnostics = Obj::new().f("reference_volume", reference);
    if let Some(f) = fit {
        diagnostics = diagnostics.set("fit_minus_reference", num(f.a - reference));
    }

    let mut table_rows: Vec<Vec<String>> = series
        .entries
        .iter()
        .map(|&(n, v)| {
            let mut r = vec!["point".to_string(), n.to_string(), cell(v)];
            r.extend(std::iter::repeat(String::new()).take(6));
            r
        })
        .collect();
    if let Some(f) = fit {
        table_rows.push(vec![
            "fit".to_string(),
            String::new(),
            String::new(),
            cell(f.a),
            cell(f.b),
            cell(f.c),
            cell(f.rms),
            f.window.0.to_string(),
            f.window.1.to_string(),
        ]);
    }
    Ok(Rendered {
        doc: document("volume-limit", inputs, outputs, diagnostics),
        table: Some(Table {
            header: vec!["record", "n", "value", "a", "b", "c", "rms", "n_min", "n_max"],
            rows: table_rows,
        }),
        failures: 0,
    })
}
