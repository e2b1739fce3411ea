pub mod check;
pub mod deform;
pub mod jones;
pub mod volume;

use serde_json::Value;

/// What a command produced: the JSON document and, for tabular commands,
/// the CSV table. Commands without a table are flattened to `key,value`.
pub struct Rendered {
    pub doc: Value,
    pub table: Option<Table>,
    /// Number of failed checks; nonzero turns into exit code 1.
    pub failures: usize,
}

pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Rendered {
    pub fn doc(doc: Value) -> Self {
        Rendered { doc, table: None, failures: 0 }
    }
}
