//! Randomized invariants over the construction-string universe.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use lapctrl::control::{check_all_methods, ControlKind, ControlMatrix};
use lapctrl::spectra::{laplacian_spectrum, EigenBasis};
use lapctrl::threshold::{is_threshold, string_from_degrees, ConstructionString, ThresholdGraph};

/// Bits of a valid construction string for a graph on 2..=max_k vertices.
fn construction_bits(max_k: usize) -> impl Strategy<Value = Vec<bool>> {
    proptest::collection::vec(any::<bool>(), 0..max_k - 1).prop_map(|mut bits| {
        bits.push(true);
        bits
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The canonical string is recovered from the degree sequence it builds.
    #[test]
    fn string_round_trips_through_degrees(bits in construction_bits(12)) {
        let s = ConstructionString::new(bits).unwrap();
        let g = ThresholdGraph::from_string(&s);
        prop_assert!(is_threshold(g.degrees()));
        prop_assert_eq!(string_from_degrees(g.degrees()).unwrap(), s);
    }

    /// Every Laplacian is symmetric with zero row sums and trace equal to
    /// the degree total.
    #[test]
    fn laplacian_shape_invariants(bits in construction_bits(12)) {
        let s = ConstructionString::new(bits).unwrap();
        let g = ThresholdGraph::from_string(&s);
        let l = g.laplacian();
        prop_assert!(l.is_symmetric());
        let ones = vec![BigInt::from(1); g.k()];
        prop_assert!(l.mul_vec(&ones).unwrap().iter().all(Zero::is_zero));
        prop_assert_eq!(l.trace(), BigInt::from(g.degrees().sum()));
    }

    /// The generated basis verifies exactly and carries the conjugate
    /// spectrum.
    #[test]
    fn eigenbasis_always_verifies(bits in construction_bits(10)) {
        let s = ConstructionString::new(bits).unwrap();
        let g = ThresholdGraph::from_string(&s);
        let basis = EigenBasis::from_laplacian(g.laplacian()).unwrap();
        prop_assert_eq!(basis.eigenvalues(), laplacian_spectrum(g.degrees()));
        prop_assert!(basis.verify(g.laplacian()).is_ok());
    }

    /// The three decision methods never disagree, whatever the binary input.
    #[test]
    fn decision_methods_never_disagree(
        bits in construction_bits(8),
        seed in any::<u64>(),
        p in 1usize..=3,
    ) {
        let s = ConstructionString::new(bits).unwrap();
        let g = ThresholdGraph::from_string(&s);
        let k = g.k();
        let rows: Vec<Vec<num_rational::BigRational>> = (0..k)
            .map(|i| {
                (0..p)
                    .map(|j| {
                        let bit = seed >> ((i * p + j) % 64) & 1;
                        num_rational::BigRational::from_integer(BigInt::from(bit))
                    })
                    .collect()
            })
            .collect();
        let b = ControlMatrix::new(ControlKind::Binary, rows).unwrap();
        prop_assert!(check_all_methods(&g, &b).is_ok());
    }
}
