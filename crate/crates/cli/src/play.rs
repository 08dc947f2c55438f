//! Human-versus-engine play loop over any line-oriented input and output.

use std::io::{self, BufRead, Write};

use sharenim::{Move, MoveError, Position, Result, Ruleset, Solver};

/// Which turn the engine takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seat {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Engine,
    Human,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finish {
    Won(Winner),
    /// Input ended before the game did.
    Abandoned,
}

/// The engine's reply: the advised winning move, or the first legal move
/// when no winning move exists.
pub fn engine_move(solver: &Solver, position: &Position, rules: Ruleset) -> Result<Option<Move>> {
    match solver.advise(position, rules)? {
        Some(mv) => Ok(Some(mv)),
        None => Ok(position.legal_moves(rules).into_iter().next()),
    }
}

/// Parses `remove <pile> <count>` or `move <from> <to> <count>` with 1-based
/// pile numbers. Pile numbers are range-checked against `piles`.
pub fn parse_move(line: &str, piles: usize) -> std::result::Result<Move, String> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let number = |s: &str| s.parse::<u64>().map_err(|_| format!("`{s}` is not a number"));
    let pile = |s: &str| -> std::result::Result<usize, String> {
        let n = number(s)?;
        if n == 0 || n > piles as u64 {
            return Err(format!("pile {n} does not exist (piles are numbered 1 to {piles})"));
        }
        Ok(n as usize - 1)
    };
    match words.as_slice() {
        ["remove", p, c] => Ok(Move::remove(pile(p)?, number(c)?)),
        ["move", f, t, c] => Ok(Move::transfer(pile(f)?, pile(t)?, number(c)?)),
        _ => Err("expected `remove <pile> <count>` or `move <from> <to> <count>`".to_string()),
    }
}

/// Names the violated rule, using 1-based pile numbers.
pub fn explain(err: &MoveError) -> String {
    match err {
        MoveError::NoSuchPile { pile } => format!("pile {} does not exist", pile + 1),
        MoveError::NotEnoughObjects {
            pile,
            available,
            requested,
        } => {
            format!(
                "pile {} holds only {available} objects, cannot take {requested}",
                pile + 1
            )
        }
        other => other.to_string(),
    }
}

/// Runs one game from `start`. The engine never makes an illegal move; human
/// input is re-prompted until it parses and is legal.
pub fn play<R: BufRead, W: Write>(
    solver: &Solver,
    start: Position,
    rules: Ruleset,
    engine: Seat,
    mut input: R,
    out: &mut W,
) -> Result<Finish> {
    let mut position = start;
    let mut engine_to_move = engine == Seat::First;
    writeln!(out, "{rules} rules, piles {position}").map_err(io_error)?;
    writeln!(
        out,
        "enter `remove <pile> <count>` or `move <from> <to> <count>`; piles are numbered from 1"
    )
    .map_err(io_error)?;

    while !position.is_terminal() {
        if engine_to_move {
            let mv = engine_move(solver, &position, rules)?
                .ok_or_else(|| sharenim::Error::Internal("no legal move in a live position".into()))?;
            position = rules.play(&position, mv)?;
            writeln!(out, "engine: {}", mv.describe()).map_err(io_error)?;
        } else {
            let mut line = String::new();
            loop {
                write!(out, "piles {position}> ").map_err(io_error)?;
                out.flush().map_err(io_error)?;
                line.clear();
                if input.read_line(&mut line).map_err(io_error)? == 0 {
                    writeln!(out).map_err(io_error)?;
                    writeln!(out, "input closed, game abandoned").map_err(io_error)?;
                    return Ok(Finish::Abandoned);
                }
                let mv = match parse_move(&line, position.len()) {
                    Ok(mv) => mv,
                    Err(msg) => {
                        writeln!(out, "{msg}").map_err(io_error)?;
                        continue;
                    }
                };
                match rules.play(&position, mv) {
                    Ok(next) => {
                        position = next;
                        break;
                    }
                    Err(e) => writeln!(out, "illegal move: {}", explain(&e)).map_err(io_error)?,
                }
            }
        }
        engine_to_move = !engine_to_move;
    }

    // the player who emptied the table moved last and wins
    let winner = if engine_to_move { Winner::Human } else { Winner::Engine };
    match winner {
        Winner::Engine => writeln!(out, "all piles are empty: the engine wins"),
        Winner::Human => writeln!(out, "all piles are empty: you win"),
    }
    .map_err(io_error)?;
    Ok(Finish::Won(winner))
}

fn io_error(e: io::Error) -> sharenim::Error {
    sharenim::Error::Internal(format!("i/o failure: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_move_forms() {
        assert_eq!(parse_move("remove 3 5\n", 3), Ok(Move::remove(2, 5)));
        assert_eq!(parse_move("  move 1 2 1 ", 3), Ok(Move::transfer(0, 1, 1)));
        assert!(parse_move("remove 4 1", 3).unwrap_err().contains("does not exist"));
        assert!(parse_move("remove 0 1", 3).is_err());
        assert!(parse_move("take 1 1", 3).is_err());
        assert!(parse_move("remove x 1", 3).unwrap_err().contains("not a number"));
    }

    #[test]
    fn explanations_are_one_based() {
        let e = Position::new(vec![1, 2, 4]).apply(Move::remove(0, 3)).unwrap_err();
        assert_eq!(explain(&e), "pile 1 holds only 1 objects, cannot take 3");
    }

    #[test]
    fn engine_falls_back_from_p_positions() {
        let solver = Solver::new();
        let mv = engine_move(&solver, &Position::new(vec![1, 2, 4]), Ruleset::SharingNim).unwrap();
        assert_eq!(mv, Some(Move::remove(0, 1)));
        assert_eq!(
            engine_move(&solver, &Position::new(vec![0, 0]), Ruleset::SharingNim).unwrap(),
            None
        );
    }
}
