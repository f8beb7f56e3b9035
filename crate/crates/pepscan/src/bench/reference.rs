//! Published timing measurements of the original 50 MHz Nios II system.
//!
//! These constants are the calibration targets and comparison baselines for
//! the benchmark harness: matching times of the co-design (custom component)
//! and of the software-only engine over three protein sets and four peptide
//! sets, plus the resulting speedups.

/// Protein set sizes the reference system was measured with.
pub const PROTEIN_SET_SIZES: [usize; 3] = [100, 500, 1000];

/// Peptide set sizes used to build the reference automata.
pub const PEPTIDE_SET_SIZES: [usize; 4] = [100, 500, 1000, 1200];

/// Total residues in each protein set, aligned with `PROTEIN_SET_SIZES`.
pub const TEXT_LENGTHS: [usize; 3] = [53_093, 172_141, 329_527];

/// Matching time in µs of the hardware/software co-design,
/// `[protein set][peptide set]`.
pub const HW_US: [[f64; 4]; 3] = [
    [59_209.0, 59_209.0, 59_171.0, 59_167.0],
    [192_637.0, 192_646.0, 192_602.0, 192_602.0],
    [367_323.0, 367_323.0, 367_323.0, 367_137.0],
];

/// Matching time in µs of the software-only engine,
/// `[protein set][peptide set]`.
///
/// The published table typesets some cells with spaces inside the digits
/// ("311 424", "1 018544"); the values here are those digit groups joined.
pub const SW_US: [[f64; 4]; 3] = [
    [311_424.0, 357_435.0, 446_742.0, 625_682.0],
    [1_018_544.0, 1_164_763.0, 1_616_889.0, 1_848_193.0],
    [1_931_712.0, 2_231_601.0, 3_102_777.0, 3_428_774.0],
];

/// Published speedup of the co-design over the software-only engine,
/// `[protein set][peptide set]`. The maximum is 10.57 at (100 proteins,
/// 1200 peptides).
pub const SPEEDUP: [[f64; 4]; 3] = [
    [5.26, 6.04, 7.55, 10.57],
    [5.29, 6.05, 8.39, 9.60],
    [5.26, 6.08, 8.45, 9.34],
];

/// All reference tables bundled for passing around.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceTables {
    pub protein_set_sizes: [usize; 3],
    pub peptide_set_sizes: [usize; 4],
    pub text_lengths: [usize; 3],
    pub hw_us: [[f64; 4]; 3],
    pub sw_us: [[f64; 4]; 3],
    pub speedup: [[f64; 4]; 3],
}

/// The embedded reference data set.
pub const REFERENCE: ReferenceTables = ReferenceTables {
    protein_set_sizes: PROTEIN_SET_SIZES,
    peptide_set_sizes: PEPTIDE_SET_SIZES,
    text_lengths: TEXT_LENGTHS,
    hw_us: HW_US,
    sw_us: SW_US,
    speedup: SPEEDUP,
};

impl ReferenceTables {
    /// Reference scan-text length for a protein set size, if measured.
    pub fn text_length_of(&self, proteins: usize) -> Option<usize> {
        self.protein_set_sizes
            .iter()
            .position(|&p| p == proteins)
            .map(|i| self.text_lengths[i])
    }

    /// Reference (hw µs, sw µs, speedup) for a grid cell, if measured.
    pub fn cell(&self, proteins: usize, peptides: usize) -> Option<(f64, f64, f64)> {
        let row = self.protein_set_sizes.iter().position(|&p| p == proteins)?;
        let col = self.peptide_set_sizes.iter().position(|&p| p == peptides)?;
        Some((
            self.hw_us[row][col],
            self.sw_us[row][col],
            self.speedup[row][col],
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn speedup_table_is_consistent_with_time_tables() {
        // The published speedups are the software/hardware time ratios,
        // rounded to two decimals.
        for i in 0..3 {
            for j in 0..4 {
                let ratio = SW_US[i][j] / HW_US[i][j];
                assert!(
                    (ratio - SPEEDUP[i][j]).abs() < 0.005 + 1e-9,
                    "cell ({i},{j}): ratio {ratio} vs published {}",
                    SPEEDUP[i][j]
                );
            }
        }
    }

    #[test]
    fn per_char_hw_cost_is_near_constant() {
        for (i, &len) in TEXT_LENGTHS.iter().enumerate() {
            for cell in HW_US[i] {
                let per_char = cell / len as f64;
                assert!((1.11..1.12).contains(&per_char), "got {per_char}");
            }
        }
    }

    #[test]
    fn lookups() {
        assert_eq!(REFERENCE.text_length_of(500), Some(172_141));
        assert_eq!(REFERENCE.text_length_of(250), None);
        let (hw, sw, sp) = REFERENCE.cell(100, 1200).unwrap();
        assert_eq!(hw, 59_167.0);
        assert_eq!(sw, 625_682.0);
        assert_eq!(sp, 10.57);
        assert_eq!(REFERENCE.cell(100, 200), None);
    }
}
