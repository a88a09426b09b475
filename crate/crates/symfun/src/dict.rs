//! The Fock dictionary: fixed-point classes of the Hilbert scheme expanded
//! in the Nakajima basis over `(1, omega)`.

use crate::jack::{jack_in_powersums, JackParam};
use combinat::{MultiPartition, WeightedPartition};
use exactalg::RationalFunction;
use fock::{FockSpace, FockVector};
use surface::SurfaceData;

/// The normalized fixed-point class `[J_{lambdavec}]` as a Fock vector over
/// the `(1, omega_1..omega_n)` labels.
///
/// Each component `J_{lambda_i}` is expanded in power sums at the parameter
/// `theta_i = wL_i/wR_i` and mapped through
/// `p_k(z^(i)) -> p_{-k}([p_i]) / wR_i`, with the overall normalization
/// `(wR_i)^{|lambda_i|}`; the fixed-point labels are then rewritten over
/// `(1, omega)`.
pub fn fixedpoint_to_nakajima(lambdavec: &MultiPartition, s: &SurfaceData) -> FockVector {
    assert_eq!(lambdavec.slots(), s.points(), "slot count must be n+1");
    let m = lambdavec.size();
    // Accumulate terms with fixed-point labels: label i-1 = [p_i].
    let mut terms: Vec<(Vec<(u32, usize)>, RationalFunction)> =
        vec![(vec![], RationalFunction::one())];
    for (idx, lam) in lambdavec.components().iter().enumerate() {
        if lam.is_empty() {
            continue;
        }
        let i = idx + 1;
        let wr = RationalFunction::from_poly(s.wr(i).clone());
        let theta = RationalFunction::from_poly(s.wl(i).clone()).div(&wr);
        let j = jack_in_powersums(lam, &JackParam::new(theta))
            .expect("generic Jack parameter");
        let mut next = vec![];
        for (pairs, coeff) in &terms {
            for (mu, c) in j.terms() {
                // (wR_i)^{|lam| - l(mu)} from the normalization against the
                // 1/wR_i per creation operator.
                let power = wr.pow((lam.size() as usize - mu.len()) as u32);
                let mut p = pairs.clone();
                p.extend(mu.parts().iter().map(|&k| (k, idx)));
                next.push((p, coeff.mul(c).mul(&power)));
            }
        }
        terms = next;
    }
    let mut v = FockVector::zero(m);
    for (pairs, coeff) in terms {
        v = v.add(&FockVector::monomial(WeightedPartition::new(pairs)).scale_rf(&coeff));
    }
    // Relabel [p_i] -> (1, omega) coordinates.
    let transform: Vec<Vec<RationalFunction>> =
        (1..=s.points()).map(|i| s.fixed_point_class(i).coords().to_vec()).collect();
    FockSpace::relabel_basis(&v, &transform)
}
