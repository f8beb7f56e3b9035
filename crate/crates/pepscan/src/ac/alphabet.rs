use super::Error;

const NO_COLUMN: u16 = u16::MAX;

/// The symbol set patterns and texts are drawn from, plus one sentinel byte
/// that is never part of any pattern.
///
/// The sentinel separates concatenated sequences in a scan text; every engine
/// treats it as "no pattern can cross this byte". Dense transition tables use
/// one column per symbol plus a trailing column for the sentinel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    sentinel: u8,
    columns: Box<[u16; 256]>,
}

impl Alphabet {
    /// Builds an alphabet from an ordered list of distinct symbols and a
    /// sentinel outside that list.
    pub fn new(symbols: &[u8], sentinel: u8) -> Result<Self, Error> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut columns = Box::new([NO_COLUMN; 256]);
        for (i, &sym) in symbols.iter().enumerate() {
            if columns[sym as usize] != NO_COLUMN {
                return Err(Error::DuplicateSymbol(sym));
            }
            columns[sym as usize] = i as u16;
        }
        if columns[sentinel as usize] != NO_COLUMN {
            return Err(Error::SentinelInAlphabet(sentinel));
        }
        columns[sentinel as usize] = symbols.len() as u16;
        Ok(Alphabet {
            symbols: symbols.to_vec(),
            sentinel,
            columns,
        })
    }

    /// Uppercase ASCII letters `A`–`Z` with `#` as sentinel.
    ///
    /// The full range covers nonstandard residue codes (B, J, O, U, X, Z)
    /// that occur in real UniProt entries alongside the 20 canonical amino
    /// acids.
    pub fn uppercase() -> Self {
        let symbols: Vec<u8> = (b'A'..=b'Z').collect();
        Alphabet::new(&symbols, b'#').expect("A-Z with '#' sentinel is a valid alphabet")
    }

    /// Ordered symbols, excluding the sentinel.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn sentinel(&self) -> u8 {
        self.sentinel
    }

    pub fn symbol_count(&self) -> usize {
        self.symbols.len()
    }

    /// Number of dense-table columns: one per symbol plus the sentinel.
    pub fn column_count(&self) -> usize {
        self.symbols.len() + 1
    }

    /// Dense-table column for a byte. Symbols map to their position,
    /// the sentinel maps to the last column, anything else to `None`.
    pub fn column_of(&self, byte: u8) -> Option<usize> {
        match self.columns[byte as usize] {
            NO_COLUMN => None,
            col => Some(col as usize),
        }
    }

    /// True for pattern symbols (the sentinel is not a symbol).
    pub fn is_symbol(&self, byte: u8) -> bool {
        byte != self.sentinel && self.columns[byte as usize] != NO_COLUMN
    }

    /// True for symbols and the sentinel: everything a scan text may contain.
    pub fn is_text_byte(&self, byte: u8) -> bool {
        self.columns[byte as usize] != NO_COLUMN
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::uppercase()
    }
}
