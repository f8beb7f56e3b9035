use super::{id_width, state_register_width, EncodingConfig, StateEncoding, CHAR_WIDTH};
use crate::ac::Automaton;
use regex::Regex;
use serde::Serialize;
use std::fmt;

/// One structural check with its verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Findings of a structural scan over generated VHDL.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("report serializes");
        json.push('\n');
        json
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if check.passed { "PASS" } else { "FAIL" },
                check.name,
                check.detail
            )?;
        }
        write!(
            f,
            "validation {}",
            if self.passed() { "passed" } else { "FAILED" }
        )
    }
}

/// Structurally validates generated VHDL against the automaton it encodes.
///
/// This is a text-level scan, not a VHDL simulation: it checks the entity
/// name, the exact port list, the state register width, that the transition
/// process has exactly one case arm per state (with each state labelled
/// once), and that every transition target is a valid state id. Behavioral
/// equivalence is covered by the JSON table twin instead.
pub fn validate_design(
    vhdl: &str,
    automaton: &Automaton,
    config: &EncodingConfig,
) -> ValidationReport {
    let mut checks = Vec::new();
    let states = automaton.state_count();

    // Entity name.
    let entity = Regex::new(r"(?m)^entity\s+(\w+)\s+is\b")
        .unwrap()
        .captures(vhdl)
        .map(|c| c[1].to_string());
    checks.push(match entity {
        Some(name) if name == config.entity_name => CheckOutcome {
            name: "entity_name".into(),
            passed: true,
            detail: format!("entity {name}"),
        },
        Some(name) => CheckOutcome {
            name: "entity_name".into(),
            passed: false,
            detail: format!("entity {name}, expected {}", config.entity_name),
        },
        None => CheckOutcome {
            name: "entity_name".into(),
            passed: false,
            detail: "no entity declaration found".into(),
        },
    });

    // Port list: name, direction, type — exactly these six.
    let expected_ports = [
        ("clk", "in", "std_logic".to_string()),
        ("rst", "in", "std_logic".to_string()),
        (
            "char_in",
            "in",
            format!("std_logic_vector({} downto 0)", CHAR_WIDTH - 1),
        ),
        ("char_valid", "in", "std_logic".to_string()),
        ("match_valid", "out", "std_logic".to_string()),
        (
            "match_count",
            "out",
            format!(
                "std_logic_vector({} downto 0)",
                id_width(automaton.pattern_count()) - 1
            ),
        ),
    ];
    let port_re = Regex::new(r"(?m)^\s*(\w+)\s*:\s*(in|out)\s+([^;]+?)\s*;?\s*$").unwrap();
    // The port list ends at its closing parenthesis line, not at the first
    // ");" (vector subtypes contain one).
    let port_block = vhdl
        .split_once("port (")
        .and_then(|(_, rest)| rest.split_once("\n  );"))
        .map(|(block, _)| block)
        .unwrap_or("");
    let found: Vec<(String, String, String)> = port_re
        .captures_iter(port_block)
        .map(|c| (c[1].to_string(), c[2].to_string(), c[3].trim().to_string()))
        .collect();
    let ports_ok = found.len() == expected_ports.len()
        && expected_ports
            .iter()
            .zip(&found)
            .all(|(e, f)| e.0 == f.0 && e.1 == f.1 && e.2 == f.2);
    checks.push(CheckOutcome {
        name: "port_list".into(),
        passed: ports_ok,
        detail: if ports_ok {
            format!("{} ports as expected", found.len())
        } else {
            format!("found {found:?}")
        },
    });

    // State register declaration and width.
    let expected_width = state_register_width(states, config.state_encoding);
    let reg_re = match config.state_encoding {
        StateEncoding::Binary => Regex::new(r"signal state : unsigned\((\d+) downto 0\)").unwrap(),
        StateEncoding::OneHot => {
            Regex::new(r"signal state : std_logic_vector\((\d+) downto 0\)").unwrap()
        }
    };
    let width = reg_re
        .captures(vhdl)
        .and_then(|c| c[1].parse::<usize>().ok())
        .map(|msb| msb + 1);
    checks.push(CheckOutcome {
        name: "state_register_width".into(),
        passed: width == Some(expected_width),
        detail: match width {
            Some(w) => format!("width {w}, expected {expected_width}"),
            None => "state register declaration not found".into(),
        },
    });

    // Case arms: one per state, each state labelled exactly once.
    let labels: Vec<usize> = match config.state_encoding {
        StateEncoding::Binary => Regex::new(r"(?m)^\s*when (\d+) =>")
            .unwrap()
            .captures_iter(vhdl)
            .filter_map(|c| c[1].parse().ok())
            .collect(),
        StateEncoding::OneHot => Regex::new(r#"(?m)^\s*when "([01]+)" =>"#)
            .unwrap()
            .captures_iter(vhdl)
            .filter_map(|c| {
                let bits = &c[1];
                bits.chars()
                    .rev()
                    .position(|b| b == '1')
                    .filter(|_| bits.chars().filter(|&b| b == '1').count() == 1)
            })
            .collect(),
    };
    let mut sorted = labels.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let arms_ok = labels.len() == states
        && sorted.len() == states
        && sorted == (0..states).collect::<Vec<_>>();
    checks.push(CheckOutcome {
        name: "case_arm_count".into(),
        passed: arms_ok,
        detail: format!("{} state arms for {states} states", labels.len()),
    });

    // Every transition target must be a valid state id.
    let target_re = Regex::new(r"next_state := (\d+);").unwrap();
    let bad_targets: Vec<usize> = target_re
        .captures_iter(vhdl)
        .filter_map(|c| c[1].parse::<usize>().ok())
        .filter(|&t| t >= states)
        .collect();
    checks.push(CheckOutcome {
        name: "targets_in_range".into(),
        passed: bad_targets.is_empty(),
        detail: if bad_targets.is_empty() {
            format!("all targets below {states}")
        } else {
            format!("out-of-range targets {bad_targets:?}")
        },
    });

    ValidationReport { checks }
}
