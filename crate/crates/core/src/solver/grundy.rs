//! Sprague-Grundy values on arbitrary finite game graphs.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use crate::bitops::mex;
use crate::game::{Position, Ruleset};
use crate::{Error, Result};

/// A game given by its follower function. The graph must be finite and
/// acyclic for evaluation to succeed.
pub trait GameGraph {
    type Node: Clone + Eq + Hash;

    fn followers(&self, node: &Self::Node) -> Vec<Self::Node>;
}

/// Explicit adjacency lists over nodes `0..n`.
#[derive(Debug, Clone, Default)]
pub struct ExplicitGraph {
    edges: Vec<Vec<usize>>,
}

impl ExplicitGraph {
    pub fn new(edges: Vec<Vec<usize>>) -> Self {
        ExplicitGraph { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl GameGraph for ExplicitGraph {
    type Node = usize;

    fn followers(&self, node: &usize) -> Vec<usize> {
        self.edges[*node].clone()
    }
}

/// Nim-style pile games. Nodes are positions; followers are reported in
/// canonical form (sorted, empty piles dropped).
#[derive(Debug, Clone, Copy)]
pub struct PileGame {
    pub rules: Ruleset,
}

impl GameGraph for PileGame {
    type Node = Position;

    fn followers(&self, node: &Position) -> Vec<Position> {
        let mut key: Vec<u64> = node.piles().iter().copied().filter(|&p| p != 0).collect();
        key.sort_unstable();
        super::follower_keys(&key, self.rules)
            .into_iter()
            .map(|k| Position::new(k.into_vec()))
            .collect()
    }
}

/// Disjunctive sum: a move is a move in exactly one component.
#[derive(Debug, Clone, Copy)]
pub struct SumGame<'a, A, B> {
    pub left: &'a A,
    pub right: &'a B,
}

impl<A: GameGraph, B: GameGraph> GameGraph for SumGame<'_, A, B> {
    type Node = (A::Node, B::Node);

    fn followers(&self, (l, r): &Self::Node) -> Vec<Self::Node> {
        let mut out: Vec<Self::Node> = self.left.followers(l).into_iter().map(|x| (x, r.clone())).collect();
        out.extend(self.right.followers(r).into_iter().map(|y| (l.clone(), y)));
        out
    }
}

/// Memoizing evaluator. Keeps values across calls on the same graph.
pub struct GrundyEvaluator<'g, G: GameGraph> {
    graph: &'g G,
    values: HashMap<G::Node, u64>,
}

struct Frame<N> {
    node: N,
    followers: Vec<N>,
    next: usize,
}

impl<'g, G: GameGraph> GrundyEvaluator<'g, G> {
    pub fn new(graph: &'g G) -> Self {
        GrundyEvaluator {
            graph,
            values: HashMap::new(),
        }
    }

    pub fn grundy(&mut self, node: &G::Node) -> Result<u64> {
        if let Some(&v) = self.values.get(node) {
            return Ok(v);
        }
        let mut on_path: HashSet<G::Node> = HashSet::new();
        on_path.insert(node.clone());
        let mut stack = vec![Frame {
            followers: self.graph.followers(node),
            node: node.clone(),
            next: 0,
        }];
        while let Some(top) = stack.last_mut() {
            let mut pending = None;
            while let Some(f) = top.followers.get(top.next) {
                if self.values.contains_key(f) {
                    top.next += 1;
                } else if on_path.contains(f) {
                    return Err(Error::CycleDetected);
                } else {
                    pending = Some(f.clone());
                    break;
                }
            }
            if let Some(child) = pending {
                on_path.insert(child.clone());
                stack.push(Frame {
                    followers: self.graph.followers(&child),
                    node: child,
                    next: 0,
                });
                continue;
            }
            let frame = stack.pop().expect("stack is non-empty");
            let value = mex(frame.followers.iter().map(|f| self.values[f]));
            on_path.remove(&frame.node);
            self.values.insert(frame.node, value);
        }
        Ok(self.values[node])
    }
}

pub fn grundy<G: GameGraph>(graph: &G, node: &G::Node) -> Result<u64> {
    GrundyEvaluator::new(graph).grundy(node)
}

/// Evaluates the sum game at `(a, b)` directly on the product graph and
/// compares with the XOR of the component values.
pub fn grundy_sum_check<A: GameGraph, B: GameGraph>(left: &A, a: &A::Node, right: &B, b: &B::Node) -> Result<bool> {
    let sum = SumGame { left, right };
    let direct = grundy(&sum, &(a.clone(), b.clone()))?;
    Ok(direct == grundy(left, a)? ^ grundy(right, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{Outcome, Solver};

    fn nim_pile(n: u64) -> Position {
        Position::new(vec![n])
    }

    #[test]
    fn terminal_is_zero() {
        let g = ExplicitGraph::new(vec![vec![]]);
        assert_eq!(grundy(&g, &0).unwrap(), 0);
    }

    #[test]
    fn single_nim_pile_is_its_size() {
        let g = PileGame {
            rules: Ruleset::ClassicNim,
        };
        for n in 0..30 {
            assert_eq!(grundy(&g, &nim_pile(n)).unwrap(), n);
        }
    }

    #[test]
    fn classic_pair_is_xor() {
        let g = PileGame {
            rules: Ruleset::ClassicNim,
        };
        assert_eq!(grundy(&g, &Position::new(vec![3, 5])).unwrap(), 6);
        assert!(grundy_sum_check(&g, &nim_pile(3), &g, &nim_pile(5)).unwrap());
    }

    #[test]
    fn two_terminals_sum_to_zero() {
        let g = ExplicitGraph::new(vec![vec![]]);
        assert!(grundy_sum_check(&g, &0, &g, &0).unwrap());
    }

    #[test]
    fn small_explicit_dag() {
        // 0: terminal, 1 -> 0, 2 -> {0, 1}, 3 -> {1}, 4 -> {2, 3}
        let g = ExplicitGraph::new(vec![vec![], vec![0], vec![0, 1], vec![1], vec![2, 3]]);
        let values: Vec<u64> = (0..5).map(|n| grundy(&g, &n).unwrap()).collect();
        assert_eq!(values, vec![0, 1, 2, 0, 1]);
    }

    #[test]
    fn cycles_are_reported() {
        let g = ExplicitGraph::new(vec![vec![1], vec![2], vec![0]]);
        assert_eq!(grundy(&g, &0), Err(Error::CycleDetected));
        let self_loop = ExplicitGraph::new(vec![vec![0]]);
        assert_eq!(grundy(&self_loop, &0), Err(Error::CycleDetected));
    }

    #[test]
    fn zero_grundy_iff_p_for_sharing_nim() {
        let g = PileGame {
            rules: Ruleset::SharingNim,
        };
        let solver = Solver::new();
        let mut eval = GrundyEvaluator::new(&g);
        for a in 0..8 {
            for b in a..8 {
                for c in b..8 {
                    let p = Position::new(vec![a, b, c]);
                    let is_p = solver.outcome(&p, Ruleset::SharingNim).unwrap() == Outcome::P;
                    assert_eq!(eval.grundy(&p).unwrap() == 0, is_p, "{p}");
                }
            }
        }
    }
}
