//! Incircles, supporting osculating circles, and disjoint unit-disk fitting.
//!
//! The incircle at a boundary point is the largest disk inside the curve
//! that touches it there. [`lemma_supporting_point`] walks nested sub-arcs
//! between incircle contacts until it reaches a point whose osculating disk
//! lies inside the curve, and [`theorem_witness`] assembles two disjoint unit
//! disks from such points for curves of curvature at most one and diameter
//! at least four.

mod fit;
mod incircle;
mod lemma;
mod theorem;

pub use fit::{k_unit_disks_fit, two_unit_disks_fit, two_unit_disks_fit_with, FitWitness, KFit, TwoDiskFit};
pub use incircle::{incircle_at, supports_from_inside, CircleArc, Incircle, SigmaSplit, Support};
pub use lemma::{lemma_supporting_point, osculating_intersection_check, spans_between_contacts, LemmaRun};
pub use theorem::{theorem_witness, SideTrace, TheoremWitness, WitnessRoute};

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::error::GeomError;
    use crate::gallery;
    use crate::kernel::{ArcSpan, ClosedArcSpline, Point2, Segment};

    fn seg_start(c: &ClosedArcSpline, i: usize) -> f64 {
        c.path().segments()[..i].iter().map(|s| s.len).sum()
    }

    fn mid(c: &ClosedArcSpline, i: usize) -> f64 {
        seg_start(c, i) + c.path().segments()[i].len / 2.0
    }

    #[test]
    fn stadium_cap_incircle_is_dense() {
        let s = gallery::stadium(2.0).unwrap();
        let inc = incircle_at(&s, 2.0 + PI / 2.0).unwrap();
        assert!((inc.radius() - 1.0).abs() < 1e-8);
        assert!(inc.circle.center.dist(Point2::new(2.0, 0.0)) < 1e-8);
        assert!(inc.is_dense());
    }

    #[test]
    fn dumbbell_apex_incircle_is_the_lobe() {
        let d = gallery::dumbbell(6.0, 4.8).unwrap();
        let inc = incircle_at(&d, 0.0).unwrap();
        assert!((inc.radius() - 1.0).abs() < 1e-8);
        assert!(inc.circle.center.dist(Point2::new(3.0, 0.0)) < 1e-8);
    }

    #[test]
    fn three_circle_incircles() {
        let t = gallery::three_circle_border(0.2).unwrap();
        let apex = incircle_at(&t, mid(&t, 0)).unwrap();
        assert!((apex.radius() - 1.0).abs() < 1e-6);
        let neck = incircle_at(&t, mid(&t, 1)).unwrap();
        assert!((neck.radius() - 1.3056724).abs() < 1e-6);
        assert!(!neck.is_dense());
        assert!(neck.contacts.len() >= 3);
        let split = neck.sigma_split.unwrap();
        assert!((split.sigma1.sweep + split.sigma2.sweep - 2.0 * PI).abs() < 1e-9);
        for &c in &neck.contacts {
            let p = t.point_at(c);
            assert!((p.dist(neck.circle.center) - neck.radius()).abs() < 1e-6);
        }
    }

    #[test]
    fn incircle_stays_inside() {
        let t = gallery::three_circle_border(0.1).unwrap();
        for i in 0..40 {
            let u = t.length() * i as f64 / 40.0;
            let inc = incircle_at(&t, u).unwrap();
            let sd = t.signed_distance(inc.circle.center);
            assert!(sd >= inc.radius() - 1e-8, "t {u}: sd {sd} r {}", inc.radius());
        }
    }

    #[test]
    fn support_classification() {
        let d = gallery::dumbbell(6.0, 4.8).unwrap();
        assert_eq!(supports_from_inside(&d, 0.0).unwrap(), Support::Inside);
        assert_eq!(supports_from_inside(&d, mid(&d, 1)).unwrap(), Support::NotInside);
        let s = gallery::stadium(2.0).unwrap();
        assert_eq!(supports_from_inside(&s, 1.0).unwrap(), Support::NotApplicable);
        assert_eq!(supports_from_inside(&s, 2.0 + PI / 2.0).unwrap(), Support::Inside);
    }

    #[test]
    fn lemma_on_dumbbell_neck() {
        let d = gallery::dumbbell(6.0, 4.8).unwrap();
        let base = incircle_at(&d, mid(&d, 1)).unwrap();
        let spans = spans_between_contacts(&base, d.length());
        assert_eq!(spans.len(), 2);
        for span in spans {
            let run = lemma_supporting_point(&d, span, &base).unwrap();
            assert!(span.offset_of(run.q, d.length()).is_some());
            assert!((run.osculating.radius - 1.0).abs() < 1e-9);
            assert!(d.signed_distance(run.osculating.center) >= 1.0 - 1e-9);
            for w in run.span_lengths.windows(2) {
                assert!(w[1] <= w[0] / 2.0 + 1e-12);
            }
        }
    }

    #[test]
    fn lemma_on_three_circle_neck() {
        let t = gallery::three_circle_border(0.2).unwrap();
        let base = incircle_at(&t, mid(&t, 1)).unwrap();
        for span in spans_between_contacts(&base, t.length()) {
            let run = lemma_supporting_point(&t, span, &base).unwrap();
            let sd = t.signed_distance(run.osculating.center);
            assert!(sd >= run.osculating.radius - 1e-8);
        }
    }

    #[test]
    fn lemma_returns_base_for_dense_incircle() {
        let s = gallery::stadium(2.0).unwrap();
        let base = incircle_at(&s, 2.0 + PI / 2.0).unwrap();
        let spans = spans_between_contacts(&base, s.length());
        assert!(!spans.is_empty());
        let run = lemma_supporting_point(&s, spans[0], &base).unwrap();
        assert!(run.dense_base);
        assert_eq!(run.q, base.base_t);
    }

    #[test]
    fn dense_base_on_a_junction_returns_the_dense_segment() {
        // t = 0 joins the left cap to the bottom straight.
        let s = gallery::stadium(2.0).unwrap();
        let base = incircle_at(&s, 0.0).unwrap();
        assert!(base.is_dense());
        for span in spans_between_contacts(&base, s.length()) {
            let run = lemma_supporting_point(&s, span, &base).unwrap();
            assert!((run.q - mid(&s, 3)).abs() < 1e-12);
            assert_eq!(supports_from_inside(&s, run.q).unwrap(), Support::Inside);
        }
    }

    #[test]
    fn lemma_rejects_spans_with_interior_contacts() {
        let t = gallery::three_circle_border(0.2).unwrap();
        let base = incircle_at(&t, mid(&t, 1)).unwrap();
        let total = t.length();
        let cs = base.other_contacts(total, 1e-6);
        assert!(cs.len() >= 2);
        // Base point to the second contact skips over the first one.
        let span = ArcSpan::new(base.base_t, cs[1], total).unwrap();
        let err = lemma_supporting_point(&t, span, &base).unwrap_err();
        assert!(matches!(err, GeomError::InvalidSpan { .. }), "{err}");
        // Endpoints off the circle.
        let span = ArcSpan::new(0.1, 0.2, total).unwrap();
        assert!(matches!(
            lemma_supporting_point(&t, span, &base),
            Err(GeomError::InvalidSpan { .. })
        ));
    }

    #[test]
    fn osculating_circles_from_the_same_lobe() {
        let d = gallery::dumbbell(6.0, 4.8).unwrap();
        let base = incircle_at(&d, 0.0).unwrap();
        assert!(osculating_intersection_check(&d, 0.0, 0.3, &base).unwrap());
        let s = gallery::stadium(2.0).unwrap();
        let base = incircle_at(&s, 2.0 + PI / 2.0).unwrap();
        assert!(osculating_intersection_check(&s, 1.0, 2.0 + PI / 2.0, &base).unwrap());
    }

    #[test]
    fn two_disk_fits() {
        let c = gallery::circle(2.0).unwrap();
        let fit = two_unit_disks_fit(&c);
        let w = fit.witness.unwrap();
        assert!(w.is_valid(1e-9));
        assert!((w.min_pair_gap - 2.0).abs() < 1e-6);
        assert!((fit.feasible_diameter - 2.0).abs() < 0.02);

        let s = gallery::stadium(2.0).unwrap();
        assert!(two_unit_disks_fit(&s).witness.unwrap().is_valid(1e-9));

        let t = gallery::three_circle_border(0.2).unwrap();
        let fit = two_unit_disks_fit(&t);
        assert!(fit.witness.is_none());
        assert!(fit.feasible_diameter < 2.0);

        let u = gallery::circle(1.5).unwrap();
        assert!(two_unit_disks_fit(&u).witness.is_none());
    }

    #[test]
    fn k_disk_fits() {
        let t = gallery::three_circle_border(0.0).unwrap();
        match k_unit_disks_fit(&t, 3).unwrap() {
            KFit::Found { witness } => {
                assert_eq!(witness.centers.len(), 3);
                assert!(witness.is_valid(1e-9));
            }
            other => panic!("{other:?}"),
        }
        let c = gallery::circle(2.0).unwrap();
        assert!(matches!(k_unit_disks_fit(&c, 3).unwrap(), KFit::NotFound { .. }));
        match k_unit_disks_fit(&c, 1).unwrap() {
            KFit::Found { witness } => assert!(witness.min_pair_gap.is_infinite()),
            other => panic!("{other:?}"),
        }
        assert!(matches!(k_unit_disks_fit(&c, 0), Err(GeomError::Parameter(_))));
    }

    #[test]
    fn witness_measure_rejects_overlap() {
        let c = gallery::circle(2.0).unwrap();
        let w = FitWitness::measure(&c, vec![Point2::new(-0.5, 0.0), Point2::new(0.5, 0.0)]);
        assert!(!w.is_valid(1e-9));
        let w = FitWitness::measure(&c, vec![Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0)]);
        assert!(w.is_valid(1e-9));
    }

    #[test]
    fn theorem_on_gallery() {
        for c in [
            gallery::circle(2.0).unwrap(),
            gallery::dumbbell(6.0, 4.8).unwrap(),
            gallery::stadium(2.0).unwrap(),
            gallery::three_circle_border(0.0).unwrap(),
        ] {
            let tw = theorem_witness(&c).unwrap();
            assert!(tw.witness.is_valid(1e-9));
            assert!(tw.witness.min_pair_gap >= 2.0 - 1e-9);
        }
        let d = gallery::dumbbell(6.0, 4.8).unwrap();
        let tw = theorem_witness(&d).unwrap();
        assert_eq!(tw.route, WitnessRoute::Construction);
        let mut xs: Vec<f64> = tw.witness.centers.iter().map(|p| p.x).collect();
        xs.sort_by(f64::total_cmp);
        assert!((xs[0] + 3.0).abs() < 1e-8 && (xs[1] - 3.0).abs() < 1e-8);
    }

    #[test]
    fn theorem_hypotheses() {
        let t = gallery::three_circle_border(0.2).unwrap();
        assert!(matches!(
            theorem_witness(&t),
            Err(GeomError::Hypothesis { hypothesis: "diameter", .. })
        ));
        let tight = ClosedArcSpline::new(
            Point2::new(0.0, -1.0 / 1.2),
            0.0,
            vec![Segment::line(4.0).unwrap(), Segment::new(1.2, PI / 1.2).unwrap(), Segment::line(4.0).unwrap(), Segment::new(1.2, PI / 1.2).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            theorem_witness(&tight),
            Err(GeomError::Hypothesis { hypothesis: "curvature", .. })
        ));
    }
}
