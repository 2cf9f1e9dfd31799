use rand::Rng;

use super::Bounds;

#[inline]
fn uniform_in<R: Rng + ?Sized>(bounds: Bounds, rng: &mut R) -> f64 {
    bounds.lower + rng.gen::<f64>() * bounds.width()
}

/// Replaces every out-of-box (or non-finite) coordinate with an independent
/// uniform draw inside the box.
pub fn repair_random<R: Rng + ?Sized>(x: &mut [f64], bounds: Bounds, rng: &mut R) {
    for v in x.iter_mut().filter(|v| !bounds.contains(**v)) {
        *v = uniform_in(bounds, rng);
    }
}

/// Replaces every out-of-box coordinate with the midpoint of a uniform draw
/// and the matching coordinate of `prev`.
pub fn repair_blend<R: Rng + ?Sized>(x: &mut [f64], prev: &[f64], bounds: Bounds, rng: &mut R) {
    debug_assert_eq!(x.len(), prev.len());
    for (v, &p) in x.iter_mut().zip(prev) {
        if !bounds.contains(*v) {
            *v = (uniform_in(bounds, rng) + p) / 2.0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn in_bounds_points_untouched() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let b = Bounds::new(-100.0, 100.0);
        let mut x = vec![-100.0, 0.0, 99.5, 100.0];
        let orig = x.clone();
        repair_random(&mut x, b, &mut rng);
        assert_eq!(x, orig);
        repair_blend(&mut x, &orig, b, &mut rng);
        assert_eq!(x, orig);
    }

    #[test]
    fn out_of_bounds_coordinate_redrawn() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let b = Bounds::new(-100.0, 100.0);
        let mut x = vec![200.0, 3.0];
        repair_random(&mut x, b, &mut rng);
        assert!(b.contains(x[0]) && x[0] != 200.0);
        assert_eq!(x[1], 3.0);
    }

    #[test]
    fn blend_against_origin_lands_in_half_box() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b = Bounds::new(-10.0, 10.0);
        for _ in 0..1000 {
            let mut x = vec![f64::INFINITY, -50.0, f64::NAN];
            repair_blend(&mut x, &[0.0, 0.0, 0.0], b, &mut rng);
            assert!(x.iter().all(|v| (-5.0..=5.0).contains(v)), "{x:?}");
        }
    }

    proptest! {
        #[test]
        fn repairs_always_close_the_box(
            x in prop::collection::vec(prop_oneof![any::<f64>(), -1e6f64..1e6], 1..20),
            seed in any::<u64>(),
        ) {
            let b = Bounds::new(-5.0, 5.0);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let prev: Vec<f64> = (0..x.len()).map(|i| -5.0 + (i % 11) as f64).collect();

            let mut a = x.clone();
            repair_random(&mut a, b, &mut rng);
            prop_assert!(b.contains_point(&a));

            let mut c = x.clone();
            repair_blend(&mut c, &prev, b, &mut rng);
            prop_assert!(b.contains_point(&c));
        }
    }
}
