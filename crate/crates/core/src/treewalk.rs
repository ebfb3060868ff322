//! Tree traversal evaluation of the closed-form twist.
//!
//! The binary expansions of `(p, q)` interleave, most significant bit
//! first, into a sequence of two-bit doublets. Each doublet steps a small
//! deterministic automaton; the node reached after the last doublet decides
//! the sign. The node set tracks exactly what the block rules need:
//!
//! * `C` - nothing seen yet (all doublets so far `00`);
//! * `T` - the right index claimed a strictly higher block; the sign will
//!   be read off the right index's bit at the left index's leading
//!   position;
//! * `D` - mirror of `T` with the left index in the higher block;
//! * `-D` - both indices nonzero and bitwise identical so far;
//! * `+1` / `-1` - decided, absorbing.
//!
//! Finishing on `-1` or `-D` means the twist is `-1`; any other node means
//! `+1`. The table is stored as plain data so it can be dumped, diffed and
//! validated wholesale against the closed form.

use std::fmt;

use crate::index::BasisIndex;
use crate::sign::Sign;
use crate::twist::omega2;

/// One interleaved bit pair: the left index's bit then the right index's
/// bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Doublet {
    D00,
    D01,
    D10,
    D11,
}

impl Doublet {
    pub const ALL: [Doublet; 4] = [Doublet::D00, Doublet::D01, Doublet::D10, Doublet::D11];

    #[inline]
    pub const fn from_bits(left: bool, right: bool) -> Self {
        match (left, right) {
            (false, false) => Doublet::D00,
            (false, true) => Doublet::D01,
            (true, false) => Doublet::D10,
            (true, true) => Doublet::D11,
        }
    }

    #[inline]
    const fn ordinal(self) -> usize {
        match self {
            Doublet::D00 => 0,
            Doublet::D01 => 1,
            Doublet::D10 => 2,
            Doublet::D11 => 3,
        }
    }

    pub const fn label(self) -> &'static str {
        match self {
            Doublet::D00 => "00",
            Doublet::D01 => "01",
            Doublet::D10 => "10",
            Doublet::D11 => "11",
        }
    }
}

impl fmt::Display for Doublet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The interleaving of two binary expansions, most significant doublet
/// first; never empty (`(0, 0)` interleaves to the single doublet `00`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubletSequence(Vec<Doublet>);

impl DoubletSequence {
    pub fn doublets(&self) -> &[Doublet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for DoubletSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Left-pads the shorter expansion with zeros, then pairs bits from the
/// most significant position down.
pub fn interleave_bits(p: BasisIndex, q: BasisIndex) -> DoubletSequence {
    let width = p.bit_width().max(q.bit_width());
    let doublets = (0..width)
        .rev()
        .map(|i| Doublet::from_bits(p.value() >> i & 1 == 1, q.value() >> i & 1 == 1))
        .collect();
    DoubletSequence(doublets)
}

/// Nodes of the traversal automaton. Labels match the trace output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeNode {
    C,
    T,
    D,
    NegD,
    PlusOne,
    MinusOne,
}

impl TreeNode {
    pub const ALL: [TreeNode; 6] = [
        TreeNode::C,
        TreeNode::T,
        TreeNode::D,
        TreeNode::NegD,
        TreeNode::PlusOne,
        TreeNode::MinusOne,
    ];

    #[inline]
    const fn ordinal(self) -> usize {
        match self {
            TreeNode::C => 0,
            TreeNode::T => 1,
            TreeNode::D => 2,
            TreeNode::NegD => 3,
            TreeNode::PlusOne => 4,
            TreeNode::MinusOne => 5,
        }
    }

    pub const fn label(self) -> &'static str {
        match self {
            TreeNode::C => "C",
            TreeNode::T => "T",
            TreeNode::D => "D",
            TreeNode::NegD => "-D",
            TreeNode::PlusOne => "+1",
            TreeNode::MinusOne => "-1",
        }
    }

    /// Sign read off the node a traversal finishes on.
    #[inline]
    pub const fn sign(self) -> Sign {
        match self {
            TreeNode::MinusOne | TreeNode::NegD => Sign::Minus,
            _ => Sign::Plus,
        }
    }

    #[inline]
    pub const fn is_absorbing(self) -> bool {
        matches!(self, TreeNode::PlusOne | TreeNode::MinusOne)
    }
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Deterministic, total transition table over [`TreeNode`] x [`Doublet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistAutomaton {
    transitions: [[TreeNode; 4]; 6],
}

/// Rows in node order C, T, D, -D, +1, -1; columns in doublet order
/// 00, 01, 10, 11.
const STANDARD_TRANSITIONS: [[TreeNode; 4]; 6] = {
    use TreeNode::{MinusOne, NegD, PlusOne, C, D, T};
    [
        [C, T, D, NegD],             // C
        [T, T, PlusOne, MinusOne],   // T
        [D, MinusOne, D, PlusOne],   // D
        [NegD, PlusOne, MinusOne, NegD], // -D
        [PlusOne; 4],                // +1
        [MinusOne; 4],               // -1
    ]
};

impl TwistAutomaton {
    /// The shipped table.
    pub const fn standard() -> Self {
        TwistAutomaton {
            transitions: STANDARD_TRANSITIONS,
        }
    }

    /// Builds an automaton from an explicit table (rows in [`TreeNode::ALL`]
    /// order, columns in [`Doublet::ALL`] order).
    pub const fn from_transitions(transitions: [[TreeNode; 4]; 6]) -> Self {
        TwistAutomaton { transitions }
    }

    /// Copy with a single edge replaced.
    pub fn with_transition(mut self, from: TreeNode, on: Doublet, to: TreeNode) -> Self {
        self.transitions[from.ordinal()][on.ordinal()] = to;
        self
    }

    #[inline]
    pub fn step(&self, node: TreeNode, doublet: Doublet) -> TreeNode {
        self.transitions[node.ordinal()][doublet.ordinal()]
    }

    /// Runs the instruction sequence from `C` and returns the final node.
    pub fn run(&self, sequence: &DoubletSequence) -> TreeNode {
        sequence
            .doublets()
            .iter()
            .fold(TreeNode::C, |node, &d| self.step(node, d))
    }

    /// Sign of the twist by traversal: interleave, run, classify. Stops
    /// early on an absorbing node; the outcome is already decided there.
    pub fn traverse(&self, p: BasisIndex, q: BasisIndex) -> Sign {
        let width = p.bit_width().max(q.bit_width());
        let mut node = TreeNode::C;
        for i in (0..width).rev() {
            let doublet =
                Doublet::from_bits(p.value() >> i & 1 == 1, q.value() >> i & 1 == 1);
            node = self.step(node, doublet);
            if node.is_absorbing() {
                break;
            }
        }
        node.sign()
    }

    /// Like [`traverse`](Self::traverse), also returning every node visited
    /// (starting at `C`, one node per doublet consumed).
    pub fn traverse_trace(&self, p: BasisIndex, q: BasisIndex) -> (Sign, Vec<TreeNode>) {
        let mut node = TreeNode::C;
        let mut trace = vec![node];
        for &d in interleave_bits(p, q).doublets() {
            node = self.step(node, d);
            trace.push(node);
        }
        (node.sign(), trace)
    }

    /// Line-per-edge serialization, `state doublet -> state`, rows in node
    /// order and columns in doublet order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for node in TreeNode::ALL {
            for doublet in Doublet::ALL {
                out.push_str(node.label());
                out.push(' ');
                out.push_str(doublet.label());
                out.push_str(" -> ");
                out.push_str(self.step(node, doublet).label());
                out.push('\n');
            }
        }
        out
    }
}

impl Default for TwistAutomaton {
    fn default() -> Self {
        TwistAutomaton::standard()
    }
}

/// Sign of the twist for the `P2` product by tree traversal with the
/// shipped automaton.
pub fn traverse(p: BasisIndex, q: BasisIndex) -> Sign {
    TwistAutomaton::standard().traverse(p, q)
}

/// First disagreement between a traversal and the closed form, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub p: BasisIndex,
    pub q: BasisIndex,
    pub traversed: Sign,
    pub expected: Sign,
}

/// Outcome of an exhaustive comparison against the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub pairs_checked: u64,
    pub mismatch: Option<Mismatch>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares `a.traverse` with the closed form for all `p, q < 2^max_exp`
/// (row-major in `p`), stopping at the first mismatch.
pub fn validate_automaton(a: &TwistAutomaton, max_exp: u32) -> ValidationReport {
    let bound = 1u64 << max_exp.min(20);
    let mut pairs_checked = 0;
    for p in 0..bound {
        for q in 0..bound {
            let p = BasisIndex::new(p).expect("below 2^20");
            let q = BasisIndex::new(q).expect("below 2^20");
            let traversed = a.traverse(p, q);
            let expected = omega2(p, q);
            pairs_checked += 1;
            if traversed != expected {
                return ValidationReport {
                    pairs_checked,
                    mismatch: Some(Mismatch {
                        p,
                        q,
                        traversed,
                        expected,
                    }),
                };
            }
        }
    }
    ValidationReport {
        pairs_checked,
        mismatch: None,
    }
}
