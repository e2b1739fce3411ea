//! Deterministic JSON and CSV rendering.
//!
//! Objects are `serde_json::Map`s, which keep keys sorted. Floats are written
//! in scientific notation with 17 significant digits; non-finite floats
//! become `null`.

use std::io::{self, Write};
use std::str::FromStr;

use jonesvol_core::Complex64;
use serde_json::{Map, Number, Value};

pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let x = if x == 0.0 { 0.0 } else { x };
    Value::Number(Number::from_str(&format!("{x:.16e}")).expect("formatted float is valid JSON"))
}

pub fn cplx(z: Complex64) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), num(z.re));
    m.insert("im".into(), num(z.im));
    Value::Object(m)
}

/// Builder for a JSON object.
#[derive(Debug, Default, Clone)]
pub struct Obj(Map<String, Value>);

impl Obj {
    pub fn new() -> Self {
        Obj(Map::new())
    }

    pub fn set(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn f(self, key: &str, x: f64) -> Self {
        self.set(key, num(x))
    }

    pub fn c(self, key: &str, z: Complex64) -> Self {
        self.set(key, cplx(z))
    }
}

impl From<Obj> for Value {
    fn from(o: Obj) -> Value {
        Value::Object(o.0)
    }
}

/// The document printed by every command.
pub fn document(command: &str, inputs: Obj, outputs: Obj, diagnostics: Obj) -> Value {
    Obj::new()
        .set("command", command)
        .set("inputs", inputs)
        .set("outputs", outputs)
        .set("diagnostics", diagnostics)
        .into()
}

pub fn write_json(out: &mut impl Write, doc: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, rows);
            }
        }
        Value::Null => rows.push((prefix.to_string(), String::new())),
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

/// Two-column `key,value` CSV of every leaf, keys dotted and sorted.
pub fn write_flat_csv(out: &mut impl Write, doc: &Value) -> io::Result<()> {
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["key", "value"])?;
    for (k, v) in rows {
        w.write_record([k, v])?;
    }
    w.flush()
}

/// Plain table CSV.
pub fn write_table_csv(out: &mut impl Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}

/// Text of a float cell in CSV output, matching the JSON formatting.
pub fn cell(x: f64) -> String {
    match num(x) {
        Value::Null => String::new(),
        v => v.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format() {
        assert_eq!(num(5.0).to_string(), "5.0000000000000000e+0");
        assert_eq!(num(-0.0).to_string(), "0.0000000000000000e+0");
        assert_eq!(num(9.5367431640625e-7).to_string(), "9.5367431640625000e-7");
        assert_eq!(num(f64::NAN), Value::Null);
    }

    #[test]
    fn keys_are_sorted() {
        let v: Value = Obj::new().f("zeta", 1.0).f("alpha", 2.0).into();
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
    }

    #[test]
    fn flat_csv() {
        let v: Value = Obj::new().c("value", Complex64::new(1.0, 2.0)).set("method", "x").into();
        let mut buf = Vec::new();
        write_flat_csv(&mut buf, &v).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "key,value\nmethod,x\nvalue.im,2.0000000000000000e+0\nvalue.re,1.0000000000000000e+0\n"
        );
    }
}
