//! Named congruence families reachable from `verify`.

use regtuple_core::congruence::{
    family_conj11, family_cor14, family_gen_thm29, family_nss_13, family_nss_16, family_ramanujan, family_thm12,
    family_thm13, HypothesisError, NssVariant, Strength,
};
use regtuple_core::CongruenceFamily;

pub struct Entry {
    pub id: &'static str,
    /// Flags `verify` needs for this id.
    pub params: &'static [&'static str],
    pub statement: &'static str,
    pub hypotheses: &'static str,
    pub status: &'static str,
}

pub const CATALOG: &[Entry] = &[
    Entry {
        id: "ramanujan",
        params: &["p"],
        statement: "p(pn + r) ≡ 0 (mod p), 24r ≡ 1 (mod p)",
        hypotheses: "p ∈ {5, 7, 11}",
        status: "proved (Ramanujan)",
    },
    Entry {
        id: "nss-1.2",
        params: &["alpha"],
        statement: "T_2(3^{4α+2} n + Σ_{i=0}^{2α} 3^{2i} + 3^{4α+1}) ≡ 0 (mod 24)",
        hypotheses: "α ≥ 0",
        status: "proved (earlier work on T_2)",
    },
    Entry {
        id: "nss-1.3",
        params: &["alpha"],
        statement: "T_2(3^{4α+2} n + Σ_{i=0}^{2α} 3^{2i} + 2·3^{4α+1}) ≡ 0 (mod 24)",
        hypotheses: "α ≥ 0",
        status: "proved (earlier work on T_2)",
    },
    Entry {
        id: "nss-1.6",
        params: &["p", "alpha"],
        statement: "T_2(9p^{2α+1} n + (9p^{2α+2} - 1)/8) ≡ 0 (mod 6), p ∤ n",
        hypotheses: "p prime, p ≡ 5, 7 (mod 8)",
        status: "proved (earlier work on T_2)",
    },
    Entry {
        id: "conj1.1",
        params: &["p", "t", "j"],
        statement: "T_2(9t^2 n + 9t^2 j/p + (57t^2 - 1)/8) ≡ 0 (mod 6)",
        hypotheses: "p ≥ 5 prime, (-2/p) = -1, gcd(t, 6) = 1, p | t, 1 ≤ j ≤ p - 1",
        status: "proved, and strengthened to mod 24 by thm1.2",
    },
    Entry {
        id: "thm1.2",
        params: &["N", "t"],
        statement: "T_2(9n + (N t^2 - 1)/8) ≡ 0 (mod 24)",
        hypotheses: "N ∈ {33, 57}, gcd(t, 6) = 1",
        status: "proved",
    },
    Entry {
        id: "thm1.3",
        params: &["p", "alpha", "strength"],
        statement: "T_2(p^{2α+1} n + (p^{2α+2} - 1)/8) ≡ 0 (mod 8) for p ∤ n; mod 24 if also 3 ∤ n",
        hypotheses: "p prime, p ≡ 3, 5, 7 (mod 8), α ≥ 0",
        status: "proved",
    },
    Entry {
        id: "cor1.4",
        params: &["p", "alpha"],
        statement: "T_2(9p^{2α+1} n + (9p^{2α+2} - 1)/8) ≡ 0 (mod 24), p ∤ n",
        hypotheses: "p prime, p ≡ 3, 5, 7 (mod 8), p ≠ 3",
        status: "proved",
    },
    Entry {
        id: "thm2.9",
        params: &["p", "alpha", "s", "m", "ell", "r"],
        statement: "T_{ℓ, p^α m}(p^s n + r) ≡ 0 (mod p^{α-s+1})",
        hypotheses: "p prime, α ≥ s ≥ 1, 1 ≤ r ≤ p^s - 1, m ≥ 1, ℓ ≥ 2",
        status: "proved",
    },
];

pub fn lookup(id: &str) -> Option<&'static Entry> {
    CATALOG.iter().find(|e| e.id == id)
}

/// Parameters gathered from the command line; unused ones stay `None`.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub p: Option<u64>,
    pub t: Option<u64>,
    pub j: Option<u64>,
    pub class: Option<u64>,
    pub alpha: Option<u32>,
    pub s: Option<u32>,
    pub m: Option<u64>,
    pub ell: Option<u64>,
    pub r: Option<u64>,
    pub strength: Option<Strength>,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown theorem id {0:?}; see list-theorems")]
    UnknownId(String),
    #[error("{id} needs --{flag}")]
    MissingParam { id: &'static str, flag: &'static str },
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
}

fn need<T: Copy>(id: &'static str, flag: &'static str, v: Option<T>) -> Result<T, CatalogError> {
    v.ok_or(CatalogError::MissingParam { id, flag })
}

/// Builds the family for `id`. With `force`, a family refused only because
/// of its hypotheses is returned anyway, marked forced.
pub fn build(id: &str, params: &Params, force: bool) -> Result<CongruenceFamily, CatalogError> {
    let entry = lookup(id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))?;
    let id = entry.id;
    let p = || need(id, "p", params.p);
    let alpha = || need(id, "alpha", params.alpha);
    let built = match id {
        "ramanujan" => family_ramanujan(p()?),
        "nss-1.2" => family_nss_13(NssVariant::First, alpha()?),
        "nss-1.3" => family_nss_13(NssVariant::Second, alpha()?),
        "nss-1.6" => family_nss_16(p()?, alpha()?),
        "conj1.1" => family_conj11(p()?, need(id, "t", params.t)?, need(id, "j", params.j)?),
        "thm1.2" => family_thm12(need(id, "N", params.class)?, need(id, "t", params.t)?),
        "thm1.3" => family_thm13(p()?, alpha()?, params.strength.unwrap_or(Strength::Mod8)),
        "cor1.4" => family_cor14(p()?, alpha()?),
        "thm2.9" => family_gen_thm29(
            p()?,
            alpha()?,
            need(id, "s", params.s)?,
            need(id, "m", params.m)?,
            need(id, "ell", params.ell)?,
            need(id, "r", params.r)?,
        ),
        _ => unreachable!("every catalog id is handled"),
    };
    match built {
        Ok(f) => Ok(f),
        Err(e) if force && e.forced.is_some() => Ok(e.into_forced().expect("checked")),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use regtuple_core::congruence::Claim;

    #[test]
    fn every_entry_builds_with_typical_parameters() {
        let params = Params {
            p: Some(5),
            t: Some(5),
            j: Some(1),
            class: Some(57),
            alpha: Some(1),
            s: Some(1),
            m: Some(1),
            ell: Some(2),
            r: Some(1),
            strength: None,
        };
        for e in CATALOG {
            let f = build(e.id, &params, false).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            assert_eq!(f.claim(), Claim::Proved, "{}", e.id);
        }
    }

    #[test]
    fn missing_and_forced() {
        let err = build("thm1.2", &Params { t: Some(5), ..Default::default() }, false).unwrap_err();
        assert!(matches!(err, CatalogError::MissingParam { flag: "N", .. }));
        let params = Params { p: Some(3), alpha: Some(0), ..Default::default() };
        assert!(matches!(build("cor1.4", &params, false), Err(CatalogError::Hypothesis(_))));
        assert_eq!(build("cor1.4", &params, true).unwrap().claim(), Claim::Forced);
        assert!(matches!(build("thm9.9", &params, false), Err(CatalogError::UnknownId(_))));
    }
}
