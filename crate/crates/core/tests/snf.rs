mod common;

use capax::fga::{smith_normal_form, IntMatrix};
use common::{check_snf, small_matrix};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_form_is_valid(a in small_matrix(6, 20)) {
        if let Err(msg) = check_snf(&a) {
            prop_assert!(false, "{}", msg);
        }
    }

    #[test]
    fn smith_form_is_deterministic(a in small_matrix(4, 9)) {
        let x = smith_normal_form(&a);
        let y = smith_normal_form(&a);
        prop_assert_eq!(x.d, y.d);
        prop_assert_eq!(x.u, y.u);
        prop_assert_eq!(x.v, y.v);
    }

    #[test]
    fn transpose_has_the_same_factors(a in small_matrix(5, 12)) {
        let d = smith_normal_form(&a).invariant_factors();
        let dt = smith_normal_form(&a.transpose()).invariant_factors();
        prop_assert_eq!(d, dt);
    }
}

#[test]
fn large_entries_stay_exact() {
    let big = |s: &str| s.parse::<num_bigint::BigInt>().unwrap();
    let a = IntMatrix::from_rows(
        2,
        &[
            vec![
                big("123456789012345678901234567890"),
                big("98765432109876543210"),
            ],
            vec![big("-55555555555555555555555"), big("77777777777777777777")],
        ],
    )
    .unwrap();
    check_snf(&a).unwrap();
}
