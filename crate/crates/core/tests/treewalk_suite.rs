//! Tree-traversal equivalence and the frozen transition table.

use cdtwist_core::treewalk::{validate_automaton, Doublet};
use cdtwist_core::{interleave_bits, omega2, BasisIndex, Sign, TwistAutomaton};

fn idx(v: u64) -> BasisIndex {
    BasisIndex::new(v).unwrap()
}

#[test]
fn traversal_equals_closed_form_to_twelve_bits() {
    let report = validate_automaton(&TwistAutomaton::standard(), 12);
    assert!(report.passed(), "mismatch: {:?}", report.mismatch);
    assert_eq!(report.pairs_checked, 1u64 << 24);
}

#[test]
fn dump_matches_the_golden_table() {
    let golden = include_str!("golden/automaton.txt");
    assert_eq!(TwistAutomaton::standard().dump(), golden);
}

#[test]
fn worked_trace_passes_through_two_waiting_nodes() {
    let (sign, trace) = TwistAutomaton::standard().traverse_trace(idx(3), idx(14));
    assert_eq!(sign, Sign::Minus);
    let labels: Vec<&str> = trace.iter().map(|n| n.label()).collect();
    assert_eq!(labels, ["C", "T", "T", "-1", "-1"]);
}

#[test]
fn traversal_handles_large_indices() {
    for (p, q) in [
        ((1u64 << 62) + 3, (1u64 << 62) + 3),
        ((1 << 62) + 87, (1 << 61) + 340),
        (1, 1 << 62),
    ] {
        let (p, q) = (idx(p), idx(q));
        assert_eq!(TwistAutomaton::standard().traverse(p, q), omega2(p, q));
    }
}

#[test]
fn interleave_length_is_the_padded_width() {
    assert_eq!(interleave_bits(idx(0), idx(0)).len(), 1);
    assert_eq!(interleave_bits(idx(3), idx(29)).len(), 5);
    assert_eq!(interleave_bits(idx(29), idx(3)).len(), 5);
    for (p, q) in [(7u64, 5), (3, 29), (1, 1), (0, 9)] {
        let seq = interleave_bits(idx(p), idx(q));
        let width = 64 - p.max(q).leading_zeros().min(63);
        assert_eq!(seq.len() as u32, width.max(1));
    }
}

#[test]
fn doublet_labels_render_in_order() {
    let labels: Vec<&str> = Doublet::ALL.iter().map(|d| d.label()).collect();
    assert_eq!(labels, ["00", "01", "10", "11"]);
}
