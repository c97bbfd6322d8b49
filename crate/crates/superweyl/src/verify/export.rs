//! Deterministic serialization of bracket tables: sorted pretty JSON with
//! an exact parse round-trip, and a flat CSV view.

use crate::error::SuperweylError;
use crate::verify::table::BracketTable;

/// A copy of the table with entries and fits in canonical order, so that
/// exports do not depend on construction order.
fn canonical(table: &BracketTable) -> BracketTable {
    let mut out = table.clone();
    out.entries.sort_by(|a, b| {
        (&a.family_a, a.n, &a.family_b, a.k).cmp(&(&b.family_a, b.n, &b.family_b, b.k))
    });
    out.fits.sort_by(|a, b| {
        (&a.family_a, &a.family_b, &a.target).cmp(&(&b.family_a, &b.family_b, &b.target))
    });
    out.failures.sort();
    out
}

/// Pretty JSON with families sorted by name and modes ascending.
pub fn export_table_json(table: &BracketTable) -> Result<String, SuperweylError> {
    Ok(serde_json::to_string_pretty(&canonical(table))?)
}

/// Inverse of [`export_table_json`].
pub fn parse_table_json(text: &str) -> Result<BracketTable, SuperweylError> {
    Ok(serde_json::from_str(text)?)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV row per bracket entry; the decomposition is rendered as a
/// `;`-separated list of `coefficient*family[mode]` items.
pub fn export_table_csv(table: &BracketTable) -> String {
    let table = canonical(table);
    let mut out = String::from("family_a,n,family_b,k,decomposition,central,residual_zero\n");
    for e in &table.entries {
        let decomposition = e
            .decomposition
            .iter()
            .map(|t| format!("{}*{}[{}]", t.coefficient, t.family, t.mode))
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_field(&e.family_a),
            e.n,
            csv_field(&e.family_b),
            e.k,
            csv_field(&decomposition),
            csv_field(&e.central.to_string()),
            e.residual_zero,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizations::Algebra;
    use crate::verify::table::bracket_table;

    #[test]
    fn empty_table_exports_and_parses() {
        let table = BracketTable {
            algebra: Algebra::K2.label().to_string(),
            window: 2,
            entries: Vec::new(),
            fits: Vec::new(),
            passed: true,
            failures: Vec::new(),
        };
        let text = export_table_json(&table).unwrap();
        assert_eq!(parse_table_json(&text).unwrap(), table);
    }

    #[test]
    fn round_trip_and_determinism() {
        let table = bracket_table(Algebra::K2, 2).unwrap();
        let a = export_table_json(&table).unwrap();
        let b = export_table_json(&parse_table_json(&a).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn csv_has_one_row_per_entry() {
        let table = bracket_table(Algebra::K2, 2).unwrap();
        let csv = export_table_csv(&table);
        assert_eq!(csv.lines().count(), table.entries.len() + 1);
        assert!(csv.starts_with("family_a,"));
    }
}
