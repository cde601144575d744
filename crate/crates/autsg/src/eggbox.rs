//! ASCII egg-box diagrams: one grid per D-class, rows are R-classes,
//! columns are L-classes, each cell an H-class. D-classes are printed
//! maximal-first in the class order, ties broken by smallest element.

use crate::semigroup::FiniteSemigroup;

pub fn render_eggbox(s: &FiniteSemigroup) -> String {
    let green = s.green();
    let mut out = String::new();
    for (block, &d) in green.d_topological().iter().enumerate() {
        if block > 0 {
            out.push('\n');
        }
        let elements = &green.d_classes[d];

        let mut rows: Vec<usize> = elements.iter().map(|&e| green.r_class_of[e]).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut cols: Vec<usize> = elements.iter().map(|&e| green.l_class_of[e]).collect();
        cols.sort_unstable();
        cols.dedup();

        let cell = |r: usize, l: usize| -> String {
            let members: Vec<&str> = elements
                .iter()
                .filter(|&&e| green.r_class_of[e] == r && green.l_class_of[e] == l)
                .map(|&e| s.name(e))
                .collect();
            members.join(" ")
        };
        let grid: Vec<Vec<String>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&l| cell(r, l)).collect())
            .collect();
        let width = grid
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1)
            .max(1);

        let rule = {
            let mut rule = String::from("+");
            for _ in &cols {
                rule.push_str(&"-".repeat(width + 2));
                rule.push('+');
            }
            rule
        };
        out.push_str(&rule);
        out.push('\n');
        for row in &grid {
            out.push('|');
            for cell in row {
                out.push_str(&format!(" {cell:width$} |"));
            }
            out.push('\n');
            out.push_str(&rule);
            out.push('\n');
        }
    }
    out
}
