use hardbench_core::*;
fn main() {
    use FunctionId::*;
    for id in [
        Layeb03, Layeb05, Layeb06, Layeb07, Layeb09, Layeb13, Layeb18,
    ] {
        let d = descriptor(id);
        for n in [2, 10, 30] {
            for mode in [AngleMode::Degrees, AngleMode::Radians] {
                let v: Vec<(i64, f64)> = (-8..=8)
                    .map(|k| (k, reference_optimum_point(id, n, Some(k)).unwrap()))
                    .filter(|(_, x)| x.iter().all(|v| *v >= d.lower_bound && *v <= d.upper_bound))
                    .map(|(k, x)| {
                        (
                            k,
                            evaluate(id, &x, &mut EvaluationContext::new(mode, 3)).unwrap(),
                        )
                    })
                    .collect();
                let mx = v.iter().map(|a| a.1).fold(f64::MIN, f64::max);
                let mn = v.iter().map(|a| a.1).fold(f64::MAX, f64::min);
                println!(
                    "{id} n={n} {mode:?} spread {:.3e} ks {:?}",
                    mx - mn,
                    v.iter().map(|a| a.0).collect::<Vec<_>>()
                );
            }
        }
    }
}
