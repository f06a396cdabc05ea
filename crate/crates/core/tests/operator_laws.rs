use proptest::prelude::*;
use tabcrystal_core::binfty::{binfty_lower, binfty_raise, binfty_stats, is_valid_representative, t_infinity};
use tabcrystal_core::cliff::{cliff_step, cliff_zero, tableau_to_cliff, validate_cliff};
use tabcrystal_core::tableau::{apply_plain, highest_weight_tableau, tableau_stats};
use tabcrystal_core::{Direction, Family, HighestWeightCrystal, TypeSpec, Weight};

const TYPES: [(Family, usize); 10] = [
    (Family::A, 2),
    (Family::A, 3),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 2),
    (Family::C, 3),
    (Family::D, 2),
    (Family::D, 3),
    (Family::G, 2),
    (Family::A, 1),
];

fn typed_word(classical_only: bool) -> impl Strategy<Value = (TypeSpec, Vec<usize>)> {
    let count = if classical_only { 8 } else { TYPES.len() };
    (0..count, prop::collection::vec(1usize..=4, 0..=8)).prop_map(|(k, raw)| {
        let (f, n) = TYPES[k];
        let spec = TypeSpec::new(f, n).unwrap();
        let word = raw.into_iter().map(|i| (i - 1) % spec.rank() + 1).collect();
        (spec, word)
    })
}

proptest! {
    #[test]
    fn binfty_operator_laws((spec, word) in typed_word(false)) {
        let mut t = t_infinity(&spec);
        for i in word {
            let before = binfty_stats(&spec, &t);
            let next = binfty_lower(&spec, i, &t).unwrap();
            prop_assert!(is_valid_representative(&spec, next.as_tableau()));
            prop_assert_eq!(binfty_raise(&spec, i, &next).unwrap(), Some(t.clone()));
            let after = binfty_stats(&spec, &next);
            prop_assert_eq!(&after.wt, &(&before.wt - spec.simple_root(i)));
            prop_assert_eq!(after.eps[i - 1], before.eps[i - 1] + 1);
            prop_assert_eq!(after.phi[i - 1], before.phi[i - 1] - 1);
            for j in spec.indices() {
                prop_assert_eq!(after.phi[j - 1] - after.eps[j - 1], after.wt[j - 1]);
                match binfty_raise(&spec, j, &next).unwrap() {
                    None => prop_assert_eq!(after.eps[j - 1], 0),
                    Some(up) => prop_assert_eq!(&binfty_lower(&spec, j, &up).unwrap(), &next),
                }
            }
            t = next;
        }
    }

    #[test]
    fn highest_weight_operator_laws((spec, word) in typed_word(false), scale in 1i64..=2) {
        let lambda = Weight::new(match spec.family() {
            Family::B => (1..=spec.rank()).map(|k| if k == spec.rank() { 2 * scale } else { scale }).collect(),
            _ => vec![scale; spec.rank()],
        });
        let crystal = HighestWeightCrystal::new(&spec, lambda.clone()).unwrap();
        let mut t = highest_weight_tableau(&spec, &lambda).unwrap();
        for i in word {
            let Some(next) = apply_plain(&spec, i, &t, Direction::Lower).unwrap() else { continue };
            prop_assert!(crystal.contains(&next));
            prop_assert_eq!(apply_plain(&spec, i, &next, Direction::Raise).unwrap(), Some(t.clone()));
            let (s, s2) = (tableau_stats(&spec, &t), tableau_stats(&spec, &next));
            prop_assert_eq!(&s2.wt, &(&s.wt - spec.simple_root(i)));
            for j in spec.indices() {
                prop_assert_eq!(s2.phi[j - 1] - s2.eps[j - 1], s2.wt[j - 1]);
            }
            t = next;
        }
    }

    #[test]
    fn cliff_follows_tableaux((spec, word) in typed_word(true)) {
        let mut t = t_infinity(&spec);
        let mut c = cliff_zero(&spec).unwrap();
        for i in word {
            t = binfty_lower(&spec, i, &t).unwrap();
            c = cliff_step(&spec, i, &c, Direction::Lower).unwrap().unwrap();
            prop_assert!(validate_cliff(&spec, &c));
            prop_assert_eq!(&tableau_to_cliff(&spec, &t).unwrap(), &c);
        }
    }
}
