use nck_core::json::{lincomb, JsonCoeff, JsonKey};
use nck_core::{LinComb, Ring};
use serde_json::Value;
use std::fmt::Display;

/// A command's result in both output formats.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// Nonzero when the command ran but its check failed (`verify`).
    pub failed: bool,
}

impl Output {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            failed: false,
        }
    }
}

/// `c*sym[label] + ...`, coefficients in parentheses when they are not
/// plain numbers.
pub fn sum_text<K, C>(sym: &str, e: &LinComb<K, C>, label: impl Fn(&K) -> String) -> String
where
    K: Ord + Clone,
    C: Ring + Display,
{
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in e.iter() {
        let mut cs = c.to_string();
        let plain = cs
            .chars()
            .all(|ch| ch.is_ascii_digit() || ch == '/' || ch == '-');
        let neg = plain && cs.starts_with('-');
        if neg {
            cs.remove(0);
        }
        match (out.is_empty(), neg) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        if *c == C::one() || cs == "1" {
        } else if plain {
            out.push_str(&cs);
            out.push('*');
        } else {
            out.push_str(&format!("({cs})*"));
        }
        out.push_str(&format!("{sym}[{}]", label(k)));
    }
    out
}

/// An element in one basis, in both formats.
pub fn element<K, C>(sym: &str, e: &LinComb<K, C>) -> Output
where
    K: JsonKey + Ord + Clone,
    C: Ring + JsonCoeff + Display,
{
    Output::new(sum_text(sym, e, |k| k.label()), lincomb(sym, e))
}
