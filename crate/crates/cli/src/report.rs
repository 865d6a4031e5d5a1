//! Machine-readable run reports: a versioned JSON document with one entry
//! per checked inequality, numbers serialized with 17 significant digits so
//! binary64 values round-trip.

use xipos_core::BoundReport64;

/// A parameter value as a pre-rendered JSON fragment.
#[derive(Debug, Clone)]
pub struct Param(String);

/// Outcome of one CLI invocation.
#[derive(Debug)]
pub struct RunReport {
    pub command: String,
    pub parameters: Vec<(String, Param)>,
    pub checks: Vec<BoundReport64>,
    pub wall_time_ms: u128,
}

/// 17-significant-digit float rendering; non-finite values become `null`.
pub fn json_num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl Param {
    pub fn num(x: f64) -> Self {
        Param(json_num(x))
    }

    pub fn int(x: usize) -> Self {
        Param(x.to_string())
    }

    pub fn text(s: impl AsRef<str>) -> Self {
        Param(json_str(s.as_ref()))
    }
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: Vec::new(),
            checks: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: Param) {
        self.parameters.push((key.into(), value));
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.satisfied).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"schema\":\"1\"");
        out.push_str(&format!(",\"command\":{}", json_str(&self.command)));
        out.push_str(",\"parameters\":{");
        for (i, (k, v)) in self.parameters.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("{}:{}", json_str(k), v.0));
        }
        out.push_str("},\"checks\":[");
        for (i, check) in self.checks.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("{{\"name\":{},\"inputs\":{{", json_str(&check.name)));
            for (j, (k, v)) in check.inputs.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&format!("{}:{}", json_str(k), json_num(*v)));
            }
            out.push_str(&format!(
                "}},\"lhs\":{},\"rhs\":{},\"satisfied\":{},\"margin\":{}}}",
                json_num(check.lhs),
                json_num(check.rhs),
                check.satisfied,
                json_num(check.margin)
            ));
        }
        out.push_str(&format!(
            "],\"passed\":{},\"failed\":{},\"wall_time_ms\":{}}}",
            self.passed(),
            self.failed(),
            self.wall_time_ms
        ));
        out
    }
}
