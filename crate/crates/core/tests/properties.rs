use boxkite_core::algebra::{blade_mul, blade_sign, Hypercomplex, Sign};
use proptest::prelude::*;

fn element(n: u32) -> impl Strategy<Value = Hypercomplex> {
    let size = 1u32 << n;
    prop::collection::vec((0..size, -3i64..=3), 0..6).prop_map(move |terms| Hypercomplex::from_terms(n, terms).unwrap())
}

proptest! {
    #[test]
    fn index_is_xor(n in 1u32..=10, a in 0u32..1024, b in 0u32..1024) {
        let size = 1 << n;
        let (a, b) = (a % size, b % size);
        prop_assert_eq!(blade_mul(a, b, n).unwrap().index, a ^ b);
    }

    #[test]
    fn distinct_imaginaries_anticommute(a in 1u32..1024, b in 1u32..1024) {
        prop_assume!(a != b);
        prop_assert_eq!(blade_sign(a, b), -blade_sign(b, a));
    }

    #[test]
    fn sign_is_dimension_independent(a in 0u32..64, b in 0u32..64, extra in 0u32..4) {
        let n = 6 + extra;
        prop_assert_eq!(blade_mul(a, b, 6).unwrap(), blade_mul(a, b, n).unwrap());
    }

    #[test]
    fn product_distributes((x, y, z) in (element(5), element(5), element(5))) {
        let left = &x * &(&y + &z);
        let right = &(&x * &y) + &(&x * &z);
        prop_assert_eq!(left, right);
        let left = &(&x + &y) * &z;
        let right = &(&x * &z) + &(&y * &z);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn real_unit_is_two_sided_identity(x in element(6)) {
        let one = Hypercomplex::basis(6, 0).unwrap();
        prop_assert_eq!(&x * &one, x.clone());
        prop_assert_eq!(&one * &x, x);
    }

    #[test]
    fn elements_are_flexible((x, y) in (element(4), element(4))) {
        prop_assert_eq!(&(&x * &y) * &x, &x * &(&y * &x));
    }
}

#[test]
fn basis_blades_flexible_up_to_32_ions() {
    for n in 1..=5u32 {
        let size = 1u32 << n;
        for x in 0..size {
            for y in 0..size {
                // (e_x e_y) e_x and e_x (e_y e_x) share the index y
                let left = blade_sign(x, y) * blade_sign(x ^ y, x);
                let right = blade_sign(y, x) * blade_sign(x, y ^ x);
                assert_eq!(left, right, "n={n} x={x} y={y}");
            }
        }
    }
}

#[test]
fn imaginary_units_square_to_minus_one() {
    for a in 1..256 {
        assert_eq!(blade_mul(a, a, 8).unwrap().sign, Sign::Minus);
    }
}
