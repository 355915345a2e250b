use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

use unitheta::qseries::{dim_via_betaset, dim_via_hooks, f_of_betaset};
use unitheta::symbols::lt_order;
use unitheta::{BetaSet, Bipartition, Partition, Symbol};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    vec(1..=max_part, 0..=max_len).prop_map(Partition::from_parts_unsorted)
}

fn beta_set() -> impl Strategy<Value = BetaSet> {
    btree_set(0u32..24, 0..8).prop_map(|s| BetaSet::new(s.into_iter().collect()).unwrap())
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition(8, 9)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().weight(), p.weight());
    }

    #[test]
    fn hook_multiset_is_transpose_invariant(p in partition(7, 7)) {
        let mut a = p.hooks();
        let mut b = p.transpose().hooks();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn partition_text_round_trip(p in partition(8, 12)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn upsilon_inverts_the_beta_set(p in partition(6, 8), extra in 0usize..4) {
        let x = BetaSet::from_partition_with_len(&p, p.len() + extra);
        prop_assert_eq!(x.upsilon(), p);
    }

    #[test]
    fn shifting_preserves_beta_set_invariants(x in beta_set()) {
        let y = x.shift_up();
        prop_assert_eq!(y.reduce(), x.reduce());
        prop_assert_eq!(y.upsilon(), x.upsilon());
        prop_assert_eq!(y.rank(), x.rank());
        prop_assert_eq!(y.ord(), x.ord());
        prop_assert_eq!(f_of_betaset(&y), f_of_betaset(&x));
    }

    #[test]
    fn ord_is_the_degree(p in partition(5, 6)) {
        let d = dim_via_hooks(&p);
        prop_assert!(d.is_polynomial());
        prop_assert_eq!(d.degree(), BetaSet::from_partition(&p).ord());
        prop_assert_eq!(d, dim_via_betaset(&p));
    }

    #[test]
    fn symbol_round_trips(p in partition(7, 9)) {
        let s = Symbol::from_partition(&p);
        prop_assert_eq!(s.partition(), p.clone());
        prop_assert_eq!(s.rank(), p.weight());
        let back: Symbol = s.to_string().parse().unwrap();
        prop_assert_eq!(&back, &s);
        let bp = s.bipartition();
        prop_assert_eq!(Symbol::from_bipartition(&bp, s.defect()).unwrap(), s.clone());
        let d = p.two_core().d;
        prop_assert_eq!(p.weight(), d * (d + 1) / 2 + 2 * bp.weight());
        let expected = if d % 2 == 0 { d as i64 } else { -(d as i64) };
        prop_assert_eq!(s.defect(), expected);
    }

    #[test]
    fn bipartitions_give_symbols_of_the_right_rank(
        top in partition(4, 5),
        bottom in partition(4, 5),
        delta in prop::sample::select(vec![0i64, 2, -1, -3, 4]),
    ) {
        let bp = Bipartition::new(top, bottom);
        let s = Symbol::from_bipartition(&bp, delta).unwrap();
        prop_assert_eq!(s.defect(), delta);
        prop_assert_eq!(s.bipartition(), bp.clone());
        let d = s.partition().two_core().d;
        prop_assert_eq!(s.rank(), d * (d + 1) / 2 + 2 * bp.weight());
    }

    #[test]
    fn linear_order_is_antisymmetric(a in partition(5, 5), b in partition(5, 5), even in any::<bool>()) {
        let (sa, sb) = (Symbol::from_partition(&a), Symbol::from_partition(&b));
        if sa.sector() == sb.sector() && sa != sb {
            let ab = lt_order(&sa, &sb, even).unwrap();
            let ba = lt_order(&sb, &sa, even).unwrap();
            prop_assert!(ab != ba);
        }
    }
}
