//! Brute-force ground truth.
//!
//! The `brute_*` oracles only use raw loops and the move engine in
//! [`crate::game`]; they share no code with [`crate::enumeration`]. Sweeps put
//! a closed form (or a theorem's prediction) next to the matching oracle over
//! a range and collect every disagreement in a [`SweepReport`].

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::enumeration as formula;
use crate::game::{Move, Position, Ruleset};
use crate::solver::{nim_winning_move, Outcome, Solver};
use crate::{Error, Result};

pub type Triple = [u64; 3];

/// Unordered pairs of positive integers with the given sum and XOR, by loop.
pub fn brute_pairs(sum: u64, xor: u64) -> u64 {
    (1..=sum / 2).filter(|&a| a ^ (sum - a) == xor).count() as u64
}

/// Triples `a < b < c` of positive integers with `a + b + c = total` and
/// `a xor b xor c = 0`, in lexicographic order.
pub fn brute_zero_nim_triples(total: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 1..=total / 3 {
        for b in a + 1..=(total - a) / 2 {
            let c = total - a - b;
            if c > b && a ^ b ^ c == 0 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn bits(n: u64) -> u32 {
    u64::BITS - n.leading_zeros()
}

/// Zero-nim positions `(a, b, a + b)` with `1 <= a < b` whose two larger
/// piles have exactly `digits` binary digits, in lexicographic order.
pub fn brute_absum_positions(digits: u32) -> Vec<Triple> {
    if digits == 0 || digits > 20 {
        return Vec::new();
    }
    let limit = 1u64 << digits;
    let mut out = Vec::new();
    for a in 1..limit {
        for b in a + 1..limit {
            let c = a + b;
            if a ^ b ^ c == 0 && bits(b) == digits && bits(c) == digits {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Every legal Sharing Nim move from `position` that lands on zero nim-sum.
pub fn brute_zero_nim_followers(position: &Position) -> Vec<(Move, Position)> {
    position
        .legal_moves(Ruleset::SharingNim)
        .into_iter()
        .map(|mv| (mv, position.apply(mv).expect("generated move is legal")))
        .filter(|(_, next)| next.piles().iter().fold(0, |acc, &p| acc ^ p) == 0)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub input: String,
    pub formula: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    pub bound: u64,
    pub cases: u64,
    pub mismatches: Vec<Mismatch>,
    /// Extra observations, e.g. timings or directed-reachability counts.
    pub notes: Vec<(String, String)>,
}

impl SweepReport {
    pub fn new(name: impl Into<String>, bound: u64) -> Self {
        SweepReport {
            name: name.into(),
            bound,
            cases: 0,
            mismatches: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Counts one case, recording a mismatch when the two sides differ. The
    /// `formula` side is the closed form or claimed property; the `oracle`
    /// side is what enumeration or search observed.
    pub fn check<T: PartialEq + fmt::Display, U: fmt::Display>(&mut self, input: U, formula: T, oracle: T) {
        self.cases += 1;
        if formula != oracle {
            self.mismatches.push(Mismatch {
                input: input.to_string(),
                formula: formula.to_string(),
                oracle: oracle.to_string(),
            });
        }
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.notes.push((key.into(), value.to_string()));
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.cases += other.cases;
        self.mismatches.extend(other.mismatches);
        self.notes.extend(other.notes);
    }

    pub fn status(&self) -> &'static str {
        if self.is_clean() {
            "clean"
        } else {
            "mismatch"
        }
    }

    /// Human-readable rendering; lists at most `max_listed` mismatches.
    pub fn to_text(&self, max_listed: usize) -> String {
        let mut s = format!(
            "sweep {} (bound {}): {} cases, {} mismatches, {}\n",
            self.name,
            self.bound,
            self.cases,
            self.mismatches.len(),
            self.status()
        );
        for m in self.mismatches.iter().take(max_listed) {
            s += &format!(
                "  mismatch at {}: formula {} vs oracle {}\n",
                m.input, m.formula, m.oracle
            );
        }
        if self.mismatches.len() > max_listed {
            s += &format!("  ... {} more\n", self.mismatches.len() - max_listed);
        }
        for (k, v) in &self.notes {
            s += &format!("  {k}: {v}\n");
        }
        s
    }

    /// One `key=value` record per line: a summary line, then every mismatch
    /// and note. Values never contain whitespace.
    pub fn to_records(&self) -> String {
        let mut s = format!(
            "sweep={} bound={} cases={} mismatches={} status={}\n",
            self.name,
            self.bound,
            self.cases,
            self.mismatches.len(),
            self.status()
        );
        for m in &self.mismatches {
            s += &format!(
                "mismatch sweep={} input={} formula={} oracle={}\n",
                self.name,
                no_space(&m.input),
                no_space(&m.formula),
                no_space(&m.oracle)
            );
        }
        for (k, v) in &self.notes {
            s += &format!("note sweep={} key={} value={}\n", self.name, no_space(k), no_space(v));
        }
        s
    }
}

fn no_space(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join("_")
}

fn tuple(p: &[u64]) -> String {
    let inner: Vec<String> = p.iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}

fn count_or_err(c: Result<formula::Count>) -> String {
    match c {
        Ok(c) => c.to_string(),
        Err(e) => format!("error:{e}"),
    }
}

/// `pair_count(S, X)` against [`brute_pairs`] for all `0 <= S, X <= bound`.
pub fn sweep_pairs(bound: u64) -> SweepReport {
    let mut r = SweepReport::new("pairs", bound);
    for s in 0..=bound {
        for x in 0..=bound {
            r.check(
                format!("S={s},X={x}"),
                count_or_err(formula::pair_count(s, x)),
                brute_pairs(s, x).to_string(),
            );
        }
    }
    r
}

/// Zero-nim triple count per total, formula against enumeration.
pub fn sweep_zero_nim_sum(bound: u64) -> SweepReport {
    let mut r = SweepReport::new("zero-nim-sum", bound);
    for s in 0..=bound {
        let brute = brute_zero_nim_triples(s).len().to_string();
        r.check(format!("S={s}"), count_or_err(formula::zero_nim_count_by_sum(s)), brute);
    }
    r
}

/// Cumulative zero-nim triple count, formula against enumeration.
pub fn sweep_zero_nim_upto(bound: u64) -> SweepReport {
    let mut r = SweepReport::new("zero-nim-upto", bound);
    let mut running = 0u64;
    for k in 0..=bound {
        running += brute_zero_nim_triples(k).len() as u64;
        r.check(
            format!("K={k}"),
            count_or_err(formula::zero_nim_count_upto(k)),
            running.to_string(),
        );
    }
    r
}

/// `a, b, a + b` counts for 1..=bound digits, plus the digit-shape facts of
/// every enumerated position: zero nim-sum, carry-free addition, and exactly
/// two piles sharing the top bit length.
pub fn sweep_absum(bound: u64) -> SweepReport {
    let mut r = SweepReport::new("absum", bound);
    let mut running = 0u64;
    for k in 1..=bound.min(20) as u32 {
        let positions = brute_absum_positions(k);
        running += positions.len() as u64;
        r.check(
            format!("exact,k={k}"),
            count_or_err(formula::absum_count_exact_digits(k)),
            positions.len().to_string(),
        );
        r.check(
            format!("upto,k={k}"),
            count_or_err(formula::absum_count_upto_digits(k)),
            running.to_string(),
        );
        for p in &positions {
            let [a, b, c] = *p;
            r.check(format!("nim-sum,{}", tuple(p)), 0, a ^ b ^ c);
            r.check(format!("carry-free,{}", tuple(p)), 0, a & b);
            let mut lens = [bits(a), bits(b), bits(c)];
            lens.sort_unstable();
            let shape_ok = lens[0] < lens[1] && lens[1] == lens[2];
            r.check(format!("bit-lengths,{}", tuple(p)), true, shape_ok);
        }
    }
    r
}

fn zero_nim_positions_upto(total: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in a..=total {
            let c = a ^ b;
            if c >= b && a + b + c <= total {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Zero-nim follower counts for every sorted zero-nim triple (empty piles
/// allowed) with total at most `bound`: the full count and the carry-free
/// count, each against move enumeration.
pub fn sweep_followers(bound: u64) -> SweepReport {
    let mut r = SweepReport::new("followers", bound);
    for p in zero_nim_positions_upto(bound) {
        let followers = brute_zero_nim_followers(&Position::new(p.to_vec()));
        r.check(
            format!("all,{}", tuple(&p)),
            count_or_err(formula::zero_nim_follower_count(&p)),
            followers.len().to_string(),
        );
        let carry_free = followers
            .iter()
            .filter(|(mv, _)| match *mv {
                Move::Transfer { from, to, count } => count & !(p[from] & !p[to]) == 0,
                Move::Remove { .. } => false,
            })
            .count();
        r.check(
            format!("carry-free,{}", tuple(&p)),
            count_or_err(formula::carry_free_follower_count(&p)),
            carry_free.to_string(),
        );
    }
    r
}

/// Transfer graph on the zero-nim triples of one total. Undirected
/// connectivity is the checked property; the number of triples from which
/// every other one is reachable by legal (directed) transfers is noted.
pub fn check_transfer_connectivity(total: u64) -> SweepReport {
    let mut r = SweepReport::new("connectivity", total);
    let nodes = brute_zero_nim_triples(total);
    let index: HashMap<Triple, usize> = nodes.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut directed: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (i, t) in nodes.iter().enumerate() {
        let p = Position::new(t.to_vec());
        for mv in p.legal_moves(Ruleset::SharingNim) {
            if let Move::Transfer { .. } = mv {
                let mut next = p.apply(mv).expect("generated move is legal").piles().to_vec();
                next.sort_unstable();
                if let Some(&j) = index.get(&[next[0], next[1], next[2]]) {
                    directed[i].push(j);
                }
            }
        }
    }
    let mut undirected = directed.clone();
    for (i, outs) in directed.iter().enumerate() {
        for &j in outs {
            undirected[j].push(i);
        }
    }
    let components = count_components(&undirected);
    r.check(format!("S={total}"), 1.min(nodes.len()), components);
    let roots = (0..nodes.len())
        .filter(|&i| reachable(&directed, i) == nodes.len())
        .count();
    r.note(
        format!("S={total}"),
        format!("nodes={},components={components},directed_roots={roots}", nodes.len()),
    );
    r
}

fn reachable(edges: &[Vec<usize>], start: usize) -> usize {
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for &j in &edges[i] {
            if seen.insert(j) {
                stack.push(j);
            }
        }
    }
    seen.len()
}

fn count_components(edges: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; edges.len()];
    let mut components = 0;
    for start in 0..edges.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in &edges[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    components
}

/// Connectivity for every total up to `bound`, plus the check that the
/// sequence-size formula equals the number of triples. Per-total notes are
/// folded into one summary note.
pub fn sweep_connectivity(bound: u64) -> SweepReport {
    let mut r = SweepReport::new("connectivity", bound);
    let mut nonempty = 0;
    let mut rooted = 0;
    for s in 0..=bound {
        let mut one = check_transfer_connectivity(s);
        let nodes = brute_zero_nim_triples(s).len();
        if nodes > 0 {
            nonempty += 1;
            if one.notes.iter().any(|(_, v)| !v.ends_with("directed_roots=0")) {
                rooted += 1;
            }
        }
        one.notes.clear();
        r.merge(one);
        r.check(
            format!("size,S={s}"),
            count_or_err(formula::transferable_sequence_size(s)),
            nodes.to_string(),
        );
    }
    r.note("totals_with_a_directed_root", format!("{rooted}/{nonempty}"));
    r
}

/// Two-pile Sharing Nim against two-pile Nim, and P exactly on equal piles.
pub fn sweep_two_pile_equiv(solver: &Solver, bound: u64) -> Result<SweepReport> {
    let mut r = SweepReport::new("two-pile-equiv", bound);
    for a in 1..=bound {
        for b in 1..=bound {
            r.check(
                format!("same-winner,({a},{b})"),
                true,
                solver.two_pile_equivalence_check(a, b)?,
            );
            let o = solver.outcome(&Position::new(vec![a, b]), Ruleset::SharingNim)?;
            r.check(format!("p-iff-equal,({a},{b})"), a == b, o == Outcome::P);
        }
    }
    Ok(r)
}

/// Classic Nim with up to three piles of at most `bound`: searched outcome is
/// P iff the nim-sum is 0, and the constructed winning move reaches nim-sum 0.
pub fn sweep_classic_nim_theorem(solver: &Solver, bound: u64) -> Result<SweepReport> {
    let mut r = SweepReport::new("classic-nim-theorem", bound);
    let mut positions: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..3 {
        positions = positions
            .iter()
            .flat_map(|p| {
                (0..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
        for piles in &positions {
            let p = Position::new(piles.clone());
            let zero = p.nim_sum() == 0;
            let o = solver.outcome(&p, Ruleset::ClassicNim)?;
            r.check(format!("outcome,{}", tuple(piles)), zero, o == Outcome::P);
            let mv = nim_winning_move(piles);
            let reaches_zero = match mv {
                Some(mv) => Ruleset::ClassicNim
                    .play(&p, mv)
                    .map(|q| q.nim_sum() == 0)
                    .unwrap_or(false),
                None => false,
            };
            r.check(format!("winning-move,{}", tuple(piles)), !zero, reaches_zero);
        }
    }
    Ok(r)
}

/// Three-pile positions with piles at most `bound`: every transfer from a
/// nonzero nim-sum lands on nonzero nim-sum, and every removal from zero
/// nim-sum lands on nonzero nim-sum.
pub fn sweep_transfer_parity(bound: u64) -> SweepReport {
    let mut r = SweepReport::new("transfer-parity", bound);
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                let p = Position::new(vec![a, b, c]);
                let start_zero = p.nim_sum() == 0;
                for mv in p.legal_moves(Ruleset::SharingNim) {
                    let is_transfer = matches!(mv, Move::Transfer { .. });
                    if is_transfer == start_zero {
                        continue;
                    }
                    let q = p.apply(mv).expect("generated move is legal");
                    let kind = if is_transfer { "transfer" } else { "removal" };
                    r.check(
                        format!("{kind},{}->{}", tuple(p.piles()), tuple(q.piles())),
                        true,
                        q.nim_sum() != 0,
                    );
                }
            }
        }
    }
    r
}

/// Positions `1, a, b` with `2 <= a, b <= bound` and `|a - b| > 1`: the
/// searched outcome is P iff `(a - 2) xor (b - 4) = 0`.
pub fn check_one_ab(solver: &Solver, bound: u64) -> Result<SweepReport> {
    let mut r = SweepReport::new("nim-inside-nim", bound);
    for a in 2..=bound {
        for b in 2..=bound {
            if a.abs_diff(b) <= 1 {
                continue;
            }
            let predicted = b >= 4 && (a - 2) ^ (b - 4) == 0;
            let o = solver.outcome(&Position::new(vec![1, a, b]), Ruleset::SharingNim)?;
            r.check(
                format!("(1,{a},{b})"),
                if predicted { Outcome::P } else { Outcome::N },
                o,
            );
        }
    }
    Ok(r)
}

/// Positions `a, b, b + 2` with `1 <= a, b <= bound`: each is N and the
/// advised move reaches a P position.
pub fn check_b_plus_two(solver: &Solver, bound: u64) -> Result<SweepReport> {
    let mut r = SweepReport::new("nim-inside-nim", bound);
    for a in 1..=bound {
        for b in 1..=bound {
            let p = Position::new(vec![a, b, b + 2]);
            r.check(
                format!("outcome,{}", tuple(p.piles())),
                Outcome::N,
                solver.outcome(&p, Ruleset::SharingNim)?,
            );
            let wins = match solver.advise(&p, Ruleset::SharingNim)? {
                Some(mv) => solver.outcome(&p.apply(mv)?, Ruleset::SharingNim)? == Outcome::P,
                None => false,
            };
            r.check(format!("advice,{}", tuple(p.piles())), true, wins);
        }
    }
    Ok(r)
}

/// The `1, a, b` prediction, the P position `1, 2, 4`, and the `a, b, b + 2`
/// family, all up to `bound`.
pub fn sweep_nim_inside_nim(solver: &Solver, bound: u64) -> Result<SweepReport> {
    let mut r = check_one_ab(solver, bound)?;
    let o = solver.outcome(&Position::new(vec![1, 2, 4]), Ruleset::SharingNim)?;
    r.check("(1,2,4)", Outcome::P, o);
    r.merge(check_b_plus_two(solver, bound)?);
    Ok(r)
}

fn best_of<F: FnMut()>(repeats: usize, mut f: F) -> Duration {
    (0..repeats)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .min()
        .unwrap_or_default()
}

/// Allowed factor between a measured runtime ratio and the ideal one.
pub const COMPLEXITY_TOLERANCE: f64 = 3.0;

/// Runtime scaling of the counting routines. `pair_count` must take the same
/// time for sums near `2^10` and near `2^40`; the cumulative count must grow
/// quadratically over `bound / 4`, `bound / 2`, `bound`. Each measured ratio
/// must be within [`COMPLEXITY_TOLERANCE`] of the ideal (1 and 4).
pub fn sweep_complexity(bound: u64) -> SweepReport {
    let mut r = SweepReport::new("complexity", bound);
    let within =
        |ratio: f64, ideal: f64| ratio <= ideal * COMPLEXITY_TOLERANCE && ratio >= ideal / COMPLEXITY_TOLERANCE;

    const CALLS: u64 = 100_000;
    let time_pairs = |base: u64| {
        best_of(5, || {
            let mut acc = 0u128;
            for i in 0..CALLS {
                let s = base + 2 * i;
                acc = acc.wrapping_add(formula::pair_count(s, (s >> 3) | 1).map_or(0, |c| c.get()));
            }
            std::hint::black_box(acc);
        })
    };
    let small = time_pairs(1 << 10);
    let large = time_pairs(1 << 40);
    let ratio = large.as_secs_f64() / small.as_secs_f64().max(1e-9);
    r.note("pairs_ns_per_call_S~2^10", small.as_nanos() / CALLS as u128);
    r.note("pairs_ns_per_call_S~2^40", large.as_nanos() / CALLS as u128);
    r.check("pairs,ratio-within-tolerance", true, within(ratio, 1.0));

    let ks = [bound / 4, bound / 2, bound];
    let times: Vec<Duration> = ks
        .iter()
        .map(|&k| {
            best_of(3, || {
                std::hint::black_box(formula::zero_nim_count_upto(k).ok());
            })
        })
        .collect();
    for (k, t) in ks.iter().zip(&times) {
        r.note(format!("upto_ms_K={k}"), format!("{:.3}", t.as_secs_f64() * 1e3));
    }
    for w in 0..2 {
        let ratio = times[w + 1].as_secs_f64() / times[w].as_secs_f64().max(1e-9);
        r.note(format!("upto_ratio_K={}->{}", ks[w], ks[w + 1]), format!("{ratio:.2}"));
        r.check(format!("upto,K={}->{}", ks[w], ks[w + 1]), true, within(ratio, 4.0));
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    Pairs,
    ZeroNimSum,
    ZeroNimUpto,
    Absum,
    Followers,
    Connectivity,
    TwoPileEquiv,
    ClassicNimTheorem,
    TransferParity,
    NimInsideNim,
    Complexity,
}

impl Sweep {
    pub const ALL: [Sweep; 11] = [
        Sweep::Pairs,
        Sweep::ZeroNimSum,
        Sweep::ZeroNimUpto,
        Sweep::Absum,
        Sweep::Followers,
        Sweep::Connectivity,
        Sweep::TwoPileEquiv,
        Sweep::ClassicNimTheorem,
        Sweep::TransferParity,
        Sweep::NimInsideNim,
        Sweep::Complexity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sweep::Pairs => "pairs",
            Sweep::ZeroNimSum => "zero-nim-sum",
            Sweep::ZeroNimUpto => "zero-nim-upto",
            Sweep::Absum => "absum",
            Sweep::Followers => "followers",
            Sweep::Connectivity => "connectivity",
            Sweep::TwoPileEquiv => "two-pile-equiv",
            Sweep::ClassicNimTheorem => "classic-nim-theorem",
            Sweep::TransferParity => "transfer-parity",
            Sweep::NimInsideNim => "nim-inside-nim",
            Sweep::Complexity => "complexity",
        }
    }

    pub fn run(self, bound: u64) -> Result<SweepReport> {
        let solver = Solver::new();
        Ok(match self {
            Sweep::Pairs => sweep_pairs(bound),
            Sweep::ZeroNimSum => sweep_zero_nim_sum(bound),
            Sweep::ZeroNimUpto => sweep_zero_nim_upto(bound),
            Sweep::Absum => sweep_absum(bound),
            Sweep::Followers => sweep_followers(bound),
            Sweep::Connectivity => sweep_connectivity(bound),
            Sweep::TwoPileEquiv => sweep_two_pile_equiv(&solver, bound)?,
            Sweep::ClassicNimTheorem => sweep_classic_nim_theorem(&solver, bound)?,
            Sweep::TransferParity => sweep_transfer_parity(bound),
            Sweep::NimInsideNim => sweep_nim_inside_nim(&solver, bound)?,
            Sweep::Complexity => sweep_complexity(bound),
        })
    }
}

impl FromStr for Sweep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sweep::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::UnknownSweep(s.to_string()))
    }
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn run_sweep(name: &str, bound: u64) -> Result<SweepReport> {
    name.parse::<Sweep>()?.run(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_pair_examples() {
        assert_eq!(brute_pairs(6, 4), 1);
        assert_eq!(brute_pairs(6, 0), 1);
        assert_eq!(brute_pairs(1, 1), 0);
        assert_eq!(brute_pairs(6, 6), 1);
        assert_eq!(brute_pairs(4, 4), 0);
    }

    #[test]
    fn brute_triple_examples() {
        assert_eq!(brute_zero_nim_triples(6), vec![[1, 2, 3]]);
        assert!(brute_zero_nim_triples(7).is_empty());
        assert_eq!(
            brute_zero_nim_triples(14),
            vec![[1, 6, 7], [2, 5, 7], [3, 4, 7], [3, 5, 6]]
        );
        assert_eq!(brute_zero_nim_triples(30).len(), 13);
    }

    #[test]
    fn brute_absum_examples() {
        assert_eq!(brute_absum_positions(2), vec![[1, 2, 3]]);
        assert_eq!(
            brute_absum_positions(3),
            vec![[1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7]]
        );
        assert!(brute_absum_positions(1).is_empty());
    }

    #[test]
    fn brute_follower_examples() {
        let f = brute_zero_nim_followers(&Position::new(vec![1, 2, 3]));
        assert_eq!(f, vec![(Move::transfer(0, 1, 1), Position::new(vec![0, 3, 3]))]);
        let f = brute_zero_nim_followers(&Position::new(vec![7, 11, 12]));
        assert_eq!(f.len(), 7);
        assert!(f.contains(&(Move::transfer(0, 2, 3), Position::new(vec![4, 11, 15]))));
        assert!(brute_zero_nim_followers(&Position::new(vec![0, 0, 0])).is_empty());
    }

    #[test]
    fn connectivity_examples() {
        assert!(check_transfer_connectivity(6).is_clean());
        assert!(check_transfer_connectivity(7).is_clean());
        assert!(check_transfer_connectivity(34).is_clean());
    }

    #[test]
    fn small_sweeps_are_clean() {
        for (name, bound) in [
            ("pairs", 40),
            ("zero-nim-sum", 60),
            ("zero-nim-upto", 40),
            ("absum", 6),
            ("followers", 30),
            ("connectivity", 30),
            ("two-pile-equiv", 8),
            ("classic-nim-theorem", 5),
        ] {
            let r = run_sweep(name, bound).unwrap();
            assert!(r.is_clean(), "{}", r.to_text(5));
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn transfers_can_restore_zero_nim_sum() {
        // (2,3,5) has nim-sum 4; moving 1 from the 2-pile onto the 3-pile gives (1,4,5)
        let p = Position::new(vec![2, 3, 5]);
        assert_eq!(p.apply(Move::transfer(0, 1, 1)).unwrap().nim_sum(), 0);
        let r = sweep_transfer_parity(3);
        assert!(r.mismatches.iter().any(|m| m.input == "transfer,(1,1,2)->(0,2,2)"));
        assert!(r.mismatches.iter().all(|m| m.input.starts_with("transfer")));
    }

    #[test]
    fn one_ab_prediction_misses_some_positions() {
        let r = check_one_ab(&Solver::new(), 8).unwrap();
        let inputs: Vec<&str> = r.mismatches.iter().map(|m| m.input.as_str()).collect();
        assert_eq!(inputs, vec!["(1,4,2)", "(1,4,6)", "(1,5,3)", "(1,5,7)", "(1,8,6)"]);
    }

    #[test]
    fn unknown_sweep_is_an_error() {
        assert_eq!(run_sweep("bogus", 3), Err(Error::UnknownSweep("bogus".into())));
        for s in Sweep::ALL {
            assert_eq!(s.name().parse::<Sweep>().unwrap(), s);
        }
    }

    #[test]
    fn record_rendering_is_stable() {
        let mut r = SweepReport::new("demo", 2);
        r.check("x=1", 1, 1);
        r.check("x=2", 3, 4);
        r.note("remark", "two words");
        assert_eq!(
            r.to_records(),
            "sweep=demo bound=2 cases=2 mismatches=1 status=mismatch\n\
             mismatch sweep=demo input=x=2 formula=3 oracle=4\n\
             note sweep=demo key=remark value=two_words\n"
        );
        assert!(r.to_text(10).contains("mismatch at x=2: formula 3 vs oracle 4"));
    }
}
