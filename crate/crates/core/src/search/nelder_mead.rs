/// Minimizes `f` from `x0` with the Nelder–Mead simplex method.
///
/// The initial simplex offsets coordinate `i` by `step[i]`. Runs until
/// `max_evals` evaluations or until the simplex values spread by less than
/// `ftol`. `on_iter` sees the best value after each iteration.
pub(crate) fn minimize<F, G>(
    f: &mut F,
    x0: &[f64],
    step: &[f64],
    max_evals: usize,
    ftol: f64,
    mut on_iter: G,
) -> (Vec<f64>, f64, usize)
where
    F: FnMut(&[f64]) -> f64,
    G: FnMut(&[f64], f64),
{
    let n = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step[i];
        let v = f(&x);
        simplex.push((x, v));
    }
    let mut evals = n + 1;
    let order = |s: &mut Vec<(Vec<f64>, f64)>| s.sort_by(|a, b| a.1.total_cmp(&b.1));
    order(&mut simplex);
    let along = |c: &[f64], w: &[f64], t: f64| -> Vec<f64> { c.iter().zip(w).map(|(ci, wi)| ci + t * (wi - ci)).collect() };
    while evals < max_evals {
        let best = simplex[0].1;
        let worst = simplex[n].1;
        if (worst - best).abs() <= ftol * (1.0 + best.abs()) {
            break;
        }
        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / n as f64;
            }
        }
        let xr = along(&centroid, &simplex[n].0, -1.0);
        let fr = f(&xr);
        evals += 1;
        if fr < simplex[0].1 {
            let xe = along(&centroid, &simplex[n].0, -2.0);
            let fe = f(&xe);
            evals += 1;
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
        } else {
            let (xc, fc) = if fr < simplex[n].1 {
                let xc = along(&centroid, &xr, 0.5);
                let fc = f(&xc);
                (xc, fc)
            } else {
                let xc = along(&centroid, &simplex[n].0, 0.5);
                let fc = f(&xc);
                (xc, fc)
            };
            evals += 1;
            if fc < simplex[n].1.min(fr) {
                simplex[n] = (xc, fc);
            } else {
                let x_best = simplex[0].0.clone();
                for (x, v) in simplex.iter_mut().skip(1) {
                    *x = along(&x_best, x, 0.5);
                    *v = f(x);
                }
                evals += n;
            }
        }
        order(&mut simplex);
        on_iter(&simplex[0].0, simplex[0].1);
    }
    let (x, v) = simplex.swap_remove(0);
    (x, v, evals)
}
