//! Theorem "theta1" at desk scale: V^{⊗n} as a G^⊙n × S_n bimodule.

use std::sync::Arc;

use monoidrep_core::builtin::symmetric_group;
use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::rational::binomial;
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::catalog::IrrProvider;
use monoidrep_rep::{cmp_irreducibles, hom_space, is_isomorphic, Representation, Side, Subspace};
use monoidrep_symrep::symmetric_catalog;
use monoidrep_theta::{is_theta, product_monoid, BimoduleRep, ThetaReport};
use serde::Serialize;

use crate::extension::{multisets, symmetric_extension, SymExtension};
use crate::tensor::{alternating_basis, pure_matrix, rep_alt, rep_on_tensor_power, rep_sym, restrict_matrix, slot_permutations, symmetric_basis};
use crate::{Result, SymExtError};

/// The commutant equality behind the theorem, computed from the pure generators alone: their
/// images span the image of ℂ[G^⊙n], so no closure is needed.
#[derive(Clone, Debug, Serialize)]
pub struct CommutantCertificate {
    /// dim span π^{⊗n}(ℂ[G^⊙n])
    pub span_dim: usize,
    /// dim End_{S_n}(V^{⊗n})
    pub commutant_dim: usize,
    /// C(m²+n−1, n)
    pub expected: usize,
    /// dim of the span of the generator images on S^n(V) and Λ^n(V); the square of the
    /// dimension exactly when the space is irreducible
    pub sym_span: usize,
    pub sym_dim: usize,
    pub alt_span: usize,
    pub alt_dim: usize,
    pub holds: bool,
}

fn span_dim(mats: &[ExactMatrix]) -> usize {
    let Some(a) = mats.first() else { return 0 };
    let flat: Vec<Vec<CycNum>> = mats.iter().map(|x| x.entries().to_vec()).collect();
    Subspace::span(a.nrows() * a.ncols(), &flat).dim()
}

pub fn commutant_certificate(pi: &Representation, chi: &[CycNum], n: usize) -> Result<CommutantCertificate> {
    if pi.side() != Side::Left || !pi.monoid().is_group() {
        return Err(SymExtError::Precondition("π is not a left representation of a group".into()));
    }
    let m = pi.dim();
    let gens: Vec<ExactMatrix> = multisets(pi.monoid().size(), n).iter().map(|k| pure_matrix(pi, k)).collect();
    let p = slot_permutations(m, n, chi)?;
    let commutant_dim = hom_space(&p, &p)?.len();
    let (sb, ab) = (symmetric_basis(m, n), alternating_basis(m, n));
    let sym: Vec<ExactMatrix> = gens.iter().map(|a| restrict_matrix(a, m, &sb)).collect();
    let alt: Vec<ExactMatrix> = gens.iter().map(|a| restrict_matrix(a, m, &ab)).collect();
    let span = span_dim(&gens);
    let expected = binomial(m * m + n - 1, n);
    Ok(CommutantCertificate {
        span_dim: span,
        commutant_dim,
        expected,
        sym_span: span_dim(&sym),
        sym_dim: sb.len(),
        alt_span: span_dim(&alt),
        alt_dim: ab.len(),
        holds: span == commutant_dim && commutant_dim == expected,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Theta1Report {
    pub extension_size: usize,
    pub theta: ThetaReport,
    pub certificate: CommutantCertificate,
    /// (G^⊙n side, S_n side) names for each pair of the correspondence
    pub named_pairs: Vec<(String, String)>,
    pub holds: bool,
}

impl Theta1Report {
    pub fn has_pair(&self, left: &str, right: &str) -> bool {
        self.named_pairs.iter().any(|(a, b)| a == left && b == right)
    }
}

fn name_sn(v: &Representation, sign: &[CycNum]) -> String {
    if v.matrices().iter().all(|a| a.is_identity()) {
        "trivial".into()
    } else if v.dim() == 1 && v.matrices().iter().zip(sign).all(|(a, s)| a.get(0, 0) == s) {
        "sign".into()
    } else {
        format!("dim {}", v.dim())
    }
}

/// Runs is_theta on V^{⊗n} (S_n twisted by the linear character χ) over G^⊙n × S_n, next to
/// the commutant certificate.
pub fn theorem_theta1_check(
    g: &Arc<FiniteMonoid>,
    pi: &Representation,
    chi: &[CycNum],
    n: usize,
    cap: usize,
    provider: &dyn IrrProvider,
) -> Result<Theta1Report> {
    if !pi.is_irreducible() {
        return Err(SymExtError::Precondition("π is not irreducible".into()));
    }
    let ext = symmetric_extension(g, n, cap)?;
    theta1_on(&ext, pi, chi, provider)
}

pub fn theta1_on(ext: &SymExtension, pi: &Representation, chi: &[CycNum], provider: &dyn IrrProvider) -> Result<Theta1Report> {
    let n = ext.n;
    let m = pi.dim();
    let sn = Arc::new(symmetric_group(n));
    Representation::character(sn.clone(), chi.to_vec()).map_err(|_| SymExtError::Precondition("χ is not a linear character of S_n".into()))?;
    let a = rep_on_tensor_power(ext, pi)?;
    let p = slot_permutations(m, n, chi)?;
    let product = Arc::new(product_monoid(&ext.monoid, &sn));
    let k = sn.size();
    let mats = product.elements().map(|x| a.matrix(x / k).mul(p.matrix(x % k))).collect();
    let rep = Representation::new(product, Side::Left, mats)?;

    let irr1: Vec<Representation> = cmp_irreducibles(&ext.monoid, provider)?.into_iter().map(|c| c.rep).collect();
    let irr2: Vec<Representation> = symmetric_catalog(n).into_iter().map(|v| v.rebase(sn.clone())).collect();
    let bim = BimoduleRep::with_catalogs(ext.monoid.clone(), sn.clone(), rep, irr1, irr2)?;
    let theta = is_theta(&bim)?;

    let certificate = commutant_certificate(pi, chi, n)?;
    let full_span = span_dim(a.matrices());
    if full_span != certificate.span_dim {
        return Err(SymExtError::Inconsistent(format!("closure spans {full_span}, generators span {}", certificate.span_dim)));
    }

    let sym = rep_sym(ext, pi)?;
    let alt = rep_alt(ext, pi)?;
    let sign = crate::tensor::sn_character(n, true);
    let mut named_pairs = Vec::new();
    for &(i, j) in &theta.pairs {
        let v = &bim.irr1[i];
        let left = if v.dim() == sym.dim() && is_isomorphic(v, &sym)? {
            "sym".to_string()
        } else if v.dim() == alt.dim() && is_isomorphic(v, &alt)? {
            "alt".to_string()
        } else {
            format!("irr {i} (dim {})", v.dim())
        };
        named_pairs.push((left, name_sn(&bim.irr2[j], &sign)));
    }
    let holds = theta.verdict == Some(true) && certificate.holds;
    Ok(Theta1Report { extension_size: ext.size(), theta, certificate, named_pairs, holds })
}
