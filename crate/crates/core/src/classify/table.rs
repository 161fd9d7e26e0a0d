use serde::{Deserialize, Serialize};

use crate::classify::normal_form::{normal_form, NormalForm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub p: usize,
    pub q: usize,
    pub normal_form: NormalForm,
    /// `|Q_{p,q}| = 2^{p+q+1}`
    pub order: u128,
    /// Paired Clifford algebra `Cl_{p,q}(K)`.
    pub algebra: String,
}

impl TableEntry {
    pub fn new(p: usize, q: usize) -> Self {
        let nf = normal_form(p, q);
        Self { p, q, normal_form: nf, order: 1u128 << (p + q + 1), algebra: nf.algebra_label() }
    }
}

/// Triangle of `Q_{p,q}` for `p + q ≤ max_n`; row `n` lists `p = n, …, 0`
/// (so `p − q` runs from `n` down to `−n`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicTable {
    pub max_n: usize,
    pub rows: Vec<Vec<TableEntry>>,
}

/// Largest row rendered by [`periodic_table`].
pub const MAX_TABLE_N: usize = 62;

pub fn periodic_table(max_n: usize) -> PeriodicTable {
    let max_n = max_n.min(MAX_TABLE_N);
    let rows = (0..=max_n)
        .map(|n| (0..=n).rev().map(|p| TableEntry::new(p, n - p)).collect())
        .collect();
    PeriodicTable { max_n, rows }
}

impl PeriodicTable {
    pub fn entries(&self) -> impl Iterator<Item = &TableEntry> {
        self.rows.iter().flatten()
    }

    pub fn get(&self, p: usize, q: usize) -> Option<&TableEntry> {
        self.rows.get(p + q)?.get(q)
    }

    /// Pascal-triangle layout: column `p − q`, plus a cardinality column.
    /// With `algebras` each cell shows `group | algebra`.
    pub fn render_text(&self, algebras: bool) -> String {
        let cell = |e: &TableEntry| {
            if algebras {
                format!("{} | {}", e.normal_form.short_label(), e.algebra)
            } else {
                e.normal_form.short_label()
            }
        };
        let width = self.entries().map(|e| cell(e).chars().count()).max().unwrap_or(1).max(3);
        let m = self.max_n as i64;
        let pad = |s: &str| format!("{s:^width$}");
        let mut out = String::new();
        let mut header = vec![format!("{:>3}", "n")];
        header.extend((-m..=m).rev().map(|c| pad(&c.to_string())));
        header.push("order".into());
        out.push_str(header.join(" ").trim_end());
        out.push('\n');
        for (n, row) in self.rows.iter().enumerate() {
            let mut line = vec![format!("{n:>3}")];
            for c in (-m..=m).rev() {
                let entry = row.iter().find(|e| e.p as i64 - e.q as i64 == c);
                line.push(pad(&entry.map(cell).unwrap_or_default()));
            }
            line.push((1u128 << (n + 1)).to_string());
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_zero_and_three() {
        let t = periodic_table(3);
        assert_eq!(t.rows[0][0].normal_form.short_label(), "C2");
        let row3: Vec<String> = t.rows[3].iter().map(|e| e.normal_form.short_label()).collect();
        assert_eq!(row3, ["DC", "DV", "DC", "QV"]);
        assert_eq!(t.get(1, 2).unwrap().p, 1);
    }

    #[test]
    fn text_is_deterministic_and_shaped() {
        let t = periodic_table(2);
        let text = t.render_text(false);
        assert_eq!(text, periodic_table(2).render_text(false));
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().nth(3).unwrap().ends_with(" 8"));
    }
}
