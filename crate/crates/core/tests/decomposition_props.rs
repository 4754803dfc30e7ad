mod common;

use acsep_core::cliquesep::{clique_minimal_separators, decompose, decompose_recursive, SplitChoice};
use acsep_core::oracle::{brute_clique_minimal_separators, brute_has_clique_separator, brute_treewidth, OracleLimits};
use acsep_core::treedec::check_tree_decomposition;
use proptest::prelude::*;

use common::{connected_graphs, sets};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn atoms_do_not_depend_on_split_order(g in connected_graphs(1, 16)) {
        let fast = decompose(&g).unwrap().sorted_atoms();
        prop_assert_eq!(&decompose_recursive(&g, SplitChoice::First).unwrap().sorted_atoms(), &fast);
        prop_assert_eq!(&decompose_recursive(&g, SplitChoice::Last).unwrap().sorted_atoms(), &fast);
    }

    #[test]
    fn clique_separators_match_oracle(g in connected_graphs(1, 14)) {
        let limits = OracleLimits::default();
        prop_assert_eq!(
            sets(&clique_minimal_separators(&g).unwrap()),
            sets(&brute_clique_minimal_separators(&g, &limits).unwrap())
        );
    }

    #[test]
    fn atoms_are_atoms(g in connected_graphs(1, 14)) {
        let limits = OracleLimits::default();
        let d = decompose(&g).unwrap();
        check_tree_decomposition(&g, &d.atoms, &d.tree_edges).map_err(TestCaseError::fail)?;
        let mut width = 0;
        for (i, atom) in d.atoms.iter().enumerate() {
            let (sub, _) = g.induced_subgraph(atom).unwrap();
            prop_assert!(clique_minimal_separators(&sub).unwrap().is_empty());
            prop_assert!(!brute_has_clique_separator(&sub, &limits).unwrap());
            width = width.max(brute_treewidth(&sub, &limits).unwrap());
            // no atom is contained in another
            for other in &d.atoms[i + 1..] {
                prop_assert!(!atom.is_subset(other) && !other.is_subset(atom));
            }
        }
        prop_assert_eq!(width, brute_treewidth(&g, &limits).unwrap());
        for (label, &(a, b)) in d.edge_labels.iter().zip(&d.tree_edges) {
            prop_assert_eq!(&label.vertices, &d.atoms[a].intersection(&d.atoms[b]));
            prop_assert!(g.is_clique(&label.vertices));
        }
    }
}
