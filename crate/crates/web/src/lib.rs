//! WebAssembly bindings for the browser demo. Errors are returned as plain
//! strings, which the JS side receives as thrown values.

use std::cell::RefCell;

use wasm_bindgen::prelude::wasm_bindgen;

use sharenim::enumeration as count;
use sharenim::{Outcome, Position, Ruleset, Solver};

/// Largest side accepted by [`outcome_grid`].
pub const MAX_GRID: u64 = 64;

thread_local! {
    static SOLVER: RefCell<Solver> = RefCell::new(Solver::new());
}

fn rules(name: &str) -> Result<Ruleset, String> {
    name.parse()
        .map_err(|_| format!("unknown ruleset `{name}`, expected classic or sharing"))
}

fn number(s: &str) -> Result<u64, String> {
    s.trim()
        .parse::<sharenim::bitops::BitValue>()
        .map(|v| v.get())
        .map_err(|e| e.to_string())
}

/// Outcomes of the positions `(first, a, b)` for `1 <= a, b <= size`, row
/// by row (`a` major). Each byte is 0 for P and 1 for N.
#[wasm_bindgen]
pub fn outcome_grid(first: u64, size: u64, ruleset: &str) -> Result<Vec<u8>, String> {
    let r = rules(ruleset)?;
    if size == 0 || size > MAX_GRID || first > MAX_GRID {
        return Err(format!("grid side and first pile must be between 1 and {MAX_GRID}"));
    }
    SOLVER.with(|s| {
        let solver = s.borrow();
        let mut cells = Vec::with_capacity((size * size) as usize);
        for a in 1..=size {
            for b in 1..=size {
                let p = Position::new(vec![first, a, b]);
                let o = solver.outcome(&p, r).map_err(|e| e.to_string())?;
                cells.push(u8::from(o == Outcome::N));
            }
        }
        Ok(cells)
    })
}

/// Outcome, deciding rule and advised move for a position such as `"1 2 4"`,
/// as three lines of text.
#[wasm_bindgen]
pub fn analyze(piles: &str, ruleset: &str) -> Result<String, String> {
    let r = rules(ruleset)?;
    let p: Position = piles.parse().map_err(|e: sharenim::Error| e.to_string())?;
    SOLVER.with(|s| {
        let solver = s.borrow();
        let c = solver.classify(&p, r).map_err(|e| e.to_string())?;
        let advice = match solver.advise(&p, r).map_err(|e| e.to_string())? {
            Some(mv) => mv.describe(),
            None => "no winning move".to_string(),
        };
        Ok(format!(
            "position {p} ({})\noutcome {} by {}\nadvice: {advice}",
            r.name(),
            c.outcome,
            c.rule
        ))
    })
}

/// Exact count for one of the subjects `pairs`, `zero-nim-sum`,
/// `zero-nim-upto`, `absum-exact`, `absum-upto` or `followers`, with
/// whitespace- or comma-separated arguments.
#[wasm_bindgen]
pub fn count_query(subject: &str, args: &str) -> Result<String, String> {
    let values = args
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(number)
        .collect::<Result<Vec<_>, _>>()?;
    let want = |n: usize| {
        if values.len() == n {
            Ok(())
        } else {
            Err(format!("{subject} takes {n} argument(s), got {}", values.len()))
        }
    };
    let digits = |v: u64| u32::try_from(v).map_err(|_| format!("{v} digits is too many"));
    let n = match subject {
        "pairs" => want(2).and_then(|_| count::pair_count(values[0], values[1]).map_err(|e| e.to_string())),
        "zero-nim-sum" => want(1).and_then(|_| count::zero_nim_count_by_sum(values[0]).map_err(|e| e.to_string())),
        "zero-nim-upto" => want(1).and_then(|_| count::zero_nim_count_upto(values[0]).map_err(|e| e.to_string())),
        "absum-exact" => want(1)
            .and_then(|_| digits(values[0]))
            .and_then(|k| count::absum_count_exact_digits(k).map_err(|e| e.to_string())),
        "absum-upto" => want(1)
            .and_then(|_| digits(values[0]))
            .and_then(|k| count::absum_count_upto_digits(k).map_err(|e| e.to_string())),
        "followers" => want(3).and_then(|_| count::zero_nim_follower_count(&values).map_err(|e| e.to_string())),
        other => Err(format!("unknown count `{other}`")),
    }?;
    Ok(n.to_string())
}
