use super::{
    id_width, state_register_width, EncodingConfig, Error, StateEncoding, CHAR_WIDTH, MAX_WIDTH,
};
use crate::ac::{Automaton, StateId, ROOT};
use std::fmt::Write;

/// Emits a synthesizable VHDL entity for a dense-compiled automaton.
///
/// The entity has ports `clk`, `rst` (synchronous), `char_in`, `char_valid`,
/// `match_valid` and `match_count`. A single clocked process holds one case
/// arm per state; transitions are the dense table with failure links
/// compiled away, so the machine consumes one character per clock whatever
/// its size. Outputs are Moore: after a character is accepted, `match_valid`
/// and `match_count` describe the state just entered.
///
/// Output is byte-stable for a given automaton and config.
pub fn generate_vhdl(automaton: &Automaton, config: &EncodingConfig) -> Result<String, Error> {
    let dense = automaton
        .dense()
        .expect("generate_vhdl requires a dense-compiled automaton");
    validate_identifier(&config.entity_name)?;

    let states = automaton.state_count();
    let binary_width = state_register_width(states, StateEncoding::Binary);
    let count_width = id_width(automaton.pattern_count());
    if binary_width > MAX_WIDTH {
        return Err(Error::TooManyStates {
            states,
            width: binary_width,
        });
    }
    if count_width > MAX_WIDTH {
        return Err(Error::TooManyStates {
            states: automaton.pattern_count() + 1,
            width: count_width,
        });
    }

    let name = &config.entity_name;
    let reg_width = state_register_width(states, config.state_encoding);
    let mut out = String::new();

    writeln!(out, "-- {name}: multi-pattern matcher FSM").unwrap();
    writeln!(
        out,
        "-- {} states, {} patterns, {} encoding, one character per clock",
        states,
        automaton.pattern_count(),
        match config.state_encoding {
            StateEncoding::Binary => "binary",
            StateEncoding::OneHot => "one-hot",
        }
    )
    .unwrap();
    writeln!(out, "library ieee;").unwrap();
    writeln!(out, "use ieee.std_logic_1164.all;").unwrap();
    writeln!(out, "use ieee.numeric_std.all;").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "entity {name} is").unwrap();
    writeln!(out, "  port (").unwrap();
    writeln!(out, "    clk         : in  std_logic;").unwrap();
    writeln!(out, "    rst         : in  std_logic;").unwrap();
    writeln!(
        out,
        "    char_in     : in  std_logic_vector({} downto 0);",
        CHAR_WIDTH - 1
    )
    .unwrap();
    writeln!(out, "    char_valid  : in  std_logic;").unwrap();
    writeln!(out, "    match_valid : out std_logic;").unwrap();
    writeln!(
        out,
        "    match_count : out std_logic_vector({} downto 0)",
        count_width - 1
    )
    .unwrap();
    writeln!(out, "  );").unwrap();
    writeln!(out, "end entity {name};").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "architecture rtl of {name} is").unwrap();
    writeln!(out, "  constant STATE_COUNT : natural := {states};").unwrap();

    match config.state_encoding {
        StateEncoding::Binary => {
            writeln!(
                out,
                "  signal state : unsigned({} downto 0) := (others => '0');",
                reg_width - 1
            )
            .unwrap();
        }
        StateEncoding::OneHot => {
            writeln!(
                out,
                "  signal state : std_logic_vector({} downto 0) := {};",
                reg_width - 1,
                one_hot_literal(0, states)
            )
            .unwrap();
            writeln!(
                out,
                "  type state_code_table is array (0 to STATE_COUNT - 1) of std_logic_vector({} downto 0);",
                reg_width - 1
            )
            .unwrap();
            let codes: Vec<String> = (0..states).map(|s| one_hot_literal(s, states)).collect();
            writeln!(
                out,
                "  constant STATE_CODES : state_code_table := {};",
                aggregate(&codes)
            )
            .unwrap();
        }
    }

    // Moore output table: merged match count per state.
    let counts: Vec<String> = (0..states)
        .map(|s| automaton.node(s as StateId).outputs.len().to_string())
        .collect();
    writeln!(
        out,
        "  type match_count_table is array (0 to STATE_COUNT - 1) of natural;"
    )
    .unwrap();
    writeln!(
        out,
        "  constant MATCH_COUNTS : match_count_table := {};",
        aggregate(&counts)
    )
    .unwrap();

    writeln!(out, "begin").unwrap();
    writeln!(out, "  step : process (clk)").unwrap();
    writeln!(
        out,
        "    variable next_state : integer range 0 to STATE_COUNT - 1;"
    )
    .unwrap();
    writeln!(out, "  begin").unwrap();
    writeln!(out, "    if rising_edge(clk) then").unwrap();
    writeln!(out, "      if rst = '1' then").unwrap();
    match config.state_encoding {
        StateEncoding::Binary => {
            writeln!(out, "        state <= (others => '0');").unwrap();
        }
        StateEncoding::OneHot => {
            writeln!(out, "        state <= {};", one_hot_literal(0, states)).unwrap();
        }
    }
    writeln!(out, "        match_valid <= '0';").unwrap();
    writeln!(out, "        match_count <= (others => '0');").unwrap();
    writeln!(out, "      elsif char_valid = '1' then").unwrap();
    writeln!(out, "        next_state := 0;").unwrap();
    match config.state_encoding {
        StateEncoding::Binary => {
            writeln!(out, "        case to_integer(state) is").unwrap();
        }
        StateEncoding::OneHot => {
            writeln!(out, "        case state is").unwrap();
        }
    }

    for state in 0..states as StateId {
        match config.state_encoding {
            StateEncoding::Binary => {
                writeln!(out, "          when {state} =>").unwrap();
            }
            StateEncoding::OneHot => {
                writeln!(
                    out,
                    "          when {} =>",
                    one_hot_literal(state as usize, states)
                )
                .unwrap();
            }
        }
        // Explicit arms only for symbols that do not reset to the root; the
        // inner `others` handles the rest, including the sentinel and any
        // byte outside the alphabet.
        let row = dense.row(state);
        let moves: Vec<(u8, StateId)> = automaton
            .alphabet()
            .symbols()
            .iter()
            .map(|&sym| {
                let col = automaton.alphabet().column_of(sym).expect("symbol");
                (sym, row[col])
            })
            .filter(|&(_, target)| target != ROOT)
            .collect();
        if moves.is_empty() {
            writeln!(out, "            next_state := 0;").unwrap();
        } else {
            writeln!(out, "            case char_in is").unwrap();
            for (symbol, target) in moves {
                writeln!(
                    out,
                    "              when x\"{symbol:02X}\" => next_state := {target};"
                )
                .unwrap();
            }
            writeln!(out, "              when others => next_state := 0;").unwrap();
            writeln!(out, "            end case;").unwrap();
        }
    }

    writeln!(out, "          when others =>").unwrap();
    writeln!(out, "            next_state := 0;").unwrap();
    writeln!(out, "        end case;").unwrap();
    match config.state_encoding {
        StateEncoding::Binary => {
            writeln!(
                out,
                "        state <= to_unsigned(next_state, {reg_width});"
            )
            .unwrap();
        }
        StateEncoding::OneHot => {
            writeln!(out, "        state <= STATE_CODES(next_state);").unwrap();
        }
    }
    writeln!(out, "        if MATCH_COUNTS(next_state) /= 0 then").unwrap();
    writeln!(out, "          match_valid <= '1';").unwrap();
    writeln!(out, "        else").unwrap();
    writeln!(out, "          match_valid <= '0';").unwrap();
    writeln!(out, "        end if;").unwrap();
    writeln!(
        out,
        "        match_count <= std_logic_vector(to_unsigned(MATCH_COUNTS(next_state), {count_width}));"
    )
    .unwrap();
    writeln!(out, "      end if;").unwrap();
    writeln!(out, "    end if;").unwrap();
    writeln!(out, "  end process step;").unwrap();
    writeln!(out, "end architecture rtl;").unwrap();

    Ok(out)
}

fn validate_identifier(name: &str) -> Result<(), Error> {
    let mut chars = name.chars();
    let valid = match chars.next() {
        Some(first) => {
            first.is_ascii_alphabetic() && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        None => false,
    };
    if valid {
        Ok(())
    } else {
        Err(Error::InvalidIdentifier(name.to_string()))
    }
}

/// One-hot code for `state` as a VHDL bit-string literal, bit 0 on the right.
fn one_hot_literal(state: usize, states: usize) -> String {
    let mut bits: Vec<u8> = vec![b'0'; states];
    bits[states - 1 - state] = b'1';
    format!("\"{}\"", String::from_utf8(bits).unwrap())
}

/// VHDL aggregate: positional for several elements, named for one.
fn aggregate(elements: &[String]) -> String {
    if elements.len() == 1 {
        format!("(0 => {})", elements[0])
    } else {
        let mut out = String::from("(\n");
        for chunk in elements.chunks(8) {
            out.push_str("    ");
            out.push_str(&chunk.join(", "));
            out.push_str(",\n");
        }
        out.pop();
        out.pop();
        out.push_str("\n  )");
        out
    }
}
