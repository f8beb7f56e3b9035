use super::reference::ReferenceTables;
use super::BenchCell;

/// Rendered benchmark artifacts. `csv`, `tables_md` and `fig4` contain only
/// modeled quantities and are byte-stable for a given seed; `measured_csv`
/// carries the wall-clock evidence and varies run to run.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub csv: String,
    pub tables_md: String,
    pub fig4: String,
    pub measured_csv: String,
}

/// Renders the comparison artifacts for a completed cell matrix.
pub fn emit_report(cells: &[BenchCell], reference: &ReferenceTables) -> BenchReport {
    BenchReport {
        csv: render_csv(cells, reference),
        tables_md: render_tables_md(cells, reference),
        fig4: render_fig4(cells),
        measured_csv: render_measured_csv(cells),
    }
}

fn render_csv(cells: &[BenchCell], reference: &ReferenceTables) -> String {
    let mut out = String::from(
        "proteins,peptides,sw_us,hw_us,speedup,paper_sw_us,paper_hw_us,paper_speedup,rel_err\n",
    );
    for cell in cells {
        let (ref_hw, ref_sw, ref_speedup, rel_err) =
            match reference.cell(cell.proteins, cell.peptides) {
                Some((hw, sw, speedup)) => (
                    format!("{hw:.0}"),
                    format!("{sw:.0}"),
                    format!("{speedup:.2}"),
                    format!("{:.4}", (cell.speedup - speedup).abs() / speedup),
                ),
                None => (String::new(), String::new(), String::new(), String::new()),
            };
        out.push_str(&format!(
            "{},{},{:.1},{:.1},{:.3},{ref_sw},{ref_hw},{ref_speedup},{rel_err}\n",
            cell.proteins, cell.peptides, cell.modeled_sw_us, cell.modeled_hw_us, cell.speedup,
        ));
    }
    out
}

fn render_tables_md(cells: &[BenchCell], reference: &ReferenceTables) -> String {
    let protein_sizes = sorted_unique(cells.iter().map(|c| c.proteins));
    let peptide_sizes = sorted_unique(cells.iter().map(|c| c.peptides));
    let cell_at = |proteins: usize, peptides: usize| {
        cells
            .iter()
            .find(|c| c.proteins == proteins && c.peptides == peptides)
    };

    let mut out = String::from("# Matching-time model vs reference measurements\n");
    out.push_str(
        "\nEach cell shows the modeled value, the published reference value in\n\
         parentheses where one exists, and the relative deviation.\n",
    );

    let mut section = |title: &str,
                       value: &dyn Fn(&BenchCell) -> f64,
                       refv: &dyn Fn(f64, f64, f64) -> f64,
                       decimals: usize| {
        out.push_str(&format!("\n## {title}\n\n"));
        out.push_str("| proteins \\ peptides |");
        for p in &peptide_sizes {
            out.push_str(&format!(" {p} |"));
        }
        out.push('\n');
        out.push_str("|---|");
        for _ in &peptide_sizes {
            out.push_str("---|");
        }
        out.push('\n');
        for &proteins in &protein_sizes {
            out.push_str(&format!("| {proteins} |"));
            for &peptides in &peptide_sizes {
                match cell_at(proteins, peptides) {
                    Some(cell) => {
                        let modeled = value(cell);
                        match reference.cell(proteins, peptides) {
                            Some((hw, sw, speedup)) => {
                                let r = refv(hw, sw, speedup);
                                out.push_str(&format!(
                                    " {modeled:.decimals$} ({r:.decimals$}, {:+.2}%) |",
                                    100.0 * (modeled - r) / r
                                ));
                            }
                            None => out.push_str(&format!(" {modeled:.decimals$} |")),
                        }
                    }
                    None => out.push_str(" - |"),
                }
            }
            out.push('\n');
        }
    };

    section(
        "Co-design matching time (µs)",
        &|c| c.modeled_hw_us,
        &|hw, _, _| hw,
        0,
    );
    section(
        "Software-only matching time (µs)",
        &|c| c.modeled_sw_us,
        &|_, sw, _| sw,
        0,
    );
    section("Speedup", &|c| c.speedup, &|_, _, speedup| speedup, 2);
    out
}

/// Plot data for the largest peptide set: total time against text length
/// for both engines.
fn render_fig4(cells: &[BenchCell]) -> String {
    let mut out = String::from("# text_length sw_us hw_us\n");
    let Some(max_peptides) = cells.iter().map(|c| c.peptides).max() else {
        return out;
    };
    let mut rows: Vec<&BenchCell> = cells
        .iter()
        .filter(|c| c.peptides == max_peptides)
        .collect();
    rows.sort_by_key(|c| c.text_len);
    for cell in rows {
        out.push_str(&format!(
            "{} {:.1} {:.1}\n",
            cell.text_len, cell.modeled_sw_us, cell.modeled_hw_us
        ));
    }
    out
}

fn render_measured_csv(cells: &[BenchCell]) -> String {
    let mut out = String::from(
        "proteins,peptides,measured_sw_us,measured_sw_us_per_char,edge_comparisons,events\n",
    );
    for cell in cells {
        out.push_str(&format!(
            "{},{},{:.1},{:.4},{},{}\n",
            cell.proteins,
            cell.peptides,
            cell.measured_sw_us,
            cell.measured_sw_us / cell.text_len as f64,
            cell.edge_comparisons,
            cell.event_count,
        ));
    }
    out
}

fn sorted_unique(values: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = values.collect();
    v.sort_unstable();
    v.dedup();
    v
}
