use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use super::LabError;
use crate::exact_linalg::Field;
use crate::linear_part::{linear_part, linearity_defect_profile, Classification, DefectProfile};
use crate::local_algebra::FiniteLocalAlgebra;
use crate::presentation::RingPresentation;
use crate::resolution::{resolve_with, RModule, ResolutionLimits};
use crate::tor_ladder::{linear_generation, ladder_defect, second_rung_implication, ImplicationOutcome, UpsilonLadder};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub oracle_mismatch: bool,
    pub annihilation_violation: bool,
    pub equality_violation: bool,
    pub second_rung_violation: bool,
    pub bridge_mismatch: bool,
    pub invariant_failure: bool,
    /// informational, not a violation
    pub silence_tail: bool,
}

impl Flags {
    pub fn named(&self) -> [(&'static str, bool); 7] {
        [
            ("oracle_mismatch", self.oracle_mismatch),
            ("annihilation_violation", self.annihilation_violation),
            ("equality_violation", self.equality_violation),
            ("second_rung_violation", self.second_rung_violation),
            ("bridge_mismatch", self.bridge_mismatch),
            ("invariant_failure", self.invariant_failure),
            ("silence_tail", self.silence_tail),
        ]
    }

    pub fn any_violation(&self) -> bool {
        self.named().iter().any(|&(name, on)| on && name != "silence_tail")
    }
}

/// Everything computed for the residue field of one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub schema: u32,
    pub presentation: Option<String>,
    pub field: String,
    pub dim: usize,
    pub filtration_dims: Vec<usize>,
    pub graded_dims: Vec<usize>,
    pub nilpotency_index: usize,
    pub horizon: usize,
    /// `b_0 .. b_N`
    pub betti: Vec<usize>,
    /// `homology[n][q]` = `dim H_n(lin)` in internal degree `n + q`
    pub homology: Vec<Vec<usize>>,
    pub homology_totals: Vec<usize>,
    pub lin_nonzero: Vec<usize>,
    pub classification: Classification,
    pub tail_length: usize,
    /// `upsilon_ranks[i][n - 1]` = `rank υ^n_i`
    pub upsilon_ranks: Vec<Vec<usize>>,
    /// `tor_dims[i][n - 1]` = `dim Tor_i(k, R/m^n)`
    pub tor_dims: Vec<Vec<usize>>,
    pub upsilon_nonzero: Vec<usize>,
    pub ladder_classification: Classification,
    /// per index `i`, whether `∂_i(x) ∈ m^2 F_{i-1}` forces `x ∈ m F_i`
    pub linear_generation: Vec<bool>,
    /// `υ^1_i = 0 ⇒ υ^2_i = 0` at every `i`; only indices above the last
    /// nonzero `H_i(lin)` raise `second_rung_violation`
    pub second_rung: Option<Vec<ImplicationOutcome>>,
    /// indices `d` at which `υ^1_d = 0` and `m* Z_d = m* B_d` were asserted
    pub equality_checked: Vec<usize>,
    pub flags: Flags,
    pub notes: Vec<String>,
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl AlgebraReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(p) = &self.presentation {
            let _ = writeln!(s, "presentation");
            for line in p.lines() {
                let _ = writeln!(s, "  {line}");
            }
        }
        let _ = writeln!(s, "field            {}", self.field);
        let _ = writeln!(s, "dim R            {}", self.dim);
        let _ = writeln!(s, "dim m^i          {}", list(&self.filtration_dims));
        let _ = writeln!(s, "dim gr_i         {}", list(&self.graded_dims));
        let _ = writeln!(s, "horizon          {}", self.horizon);
        let _ = writeln!(s, "betti            {}", list(&self.betti));
        let _ = writeln!(s, "dim H_n(lin)     {}", list(&self.homology_totals));
        for (n, row) in self.homology.iter().enumerate() {
            if row.iter().any(|&x| x != 0) {
                let _ = writeln!(s, "  H_{n} by degree n+q, q = 0..  {}", list(row));
            }
        }
        let _ = writeln!(s, "rank υ^n_i (rows i, columns n = 1..)");
        for (i, row) in self.upsilon_ranks.iter().enumerate() {
            let _ = writeln!(s, "  i = {i:<3} {}", list(row));
        }
        let _ = writeln!(s, "classification   {}", self.classification);
        let _ = writeln!(s, "from υ ladder    {}", self.ladder_classification);
        let on: Vec<&str> = self.flags.named().iter().filter(|f| f.1).map(|f| f.0).collect();
        let _ = writeln!(s, "flags            {}", if on.is_empty() { "none".to_string() } else { on.join(", ") });
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

/// Homology of the linear part of the resolution of `k` through `horizon`.
pub fn defect_profile<F: Field>(
    algebra: &Arc<FiniteLocalAlgebra<F>>,
    horizon: usize,
    limits: &ResolutionLimits,
) -> Result<DefectProfile, LabError> {
    let res = resolve_with(&RModule::residue_field(algebra), horizon + 1, limits)?;
    let lin = linear_part(&res)?;
    Ok(linearity_defect_profile(&lin, horizon)?.0)
}

/// Resolves `k` to `horizon + 1` and runs every check on it.
pub fn full_check<F: Field>(
    algebra: &Arc<FiniteLocalAlgebra<F>>,
    presentation: Option<&RingPresentation>,
    horizon: usize,
    limits: &ResolutionLimits,
) -> Result<AlgebraReport, LabError> {
    let mut flags = Flags::default();
    let mut notes = Vec::new();
    let res = resolve_with(&RModule::residue_field(algebra), horizon + 1, limits)?;
    if let Err(e) = res.verify() {
        flags.invariant_failure = true;
        notes.push(e.to_string());
    }

    let lin = linear_part(&res)?;
    if !lin.is_square_zero() {
        flags.invariant_failure = true;
        notes.push("∂* ∘ ∂* != 0".into());
    }
    let (profile, slices) = linearity_defect_profile(&lin, horizon)?;
    for slice in &slices {
        if let Err(fail) = lin.mstar_annihilation_check(slice) {
            flags.annihilation_violation = true;
            notes.push(format!(
                "m*·Z not in B at n = {}, q = {}, generator {}",
                fail.index, fail.q, fail.generator
            ));
        }
    }

    let ladder = UpsilonLadder::compute(&res, horizon, limits)?;
    let betti = res.betti()[..=horizon].to_vec();
    for (i, &b) in betti.iter().enumerate() {
        let t = ladder.tor_dims.get(&(i, 1)).copied().unwrap_or(0);
        if t != b {
            flags.invariant_failure = true;
            notes.push(format!("dim Tor_{i}(k, k) = {t} but b_{i} = {b}"));
        }
    }
    let ladder_profile = ladder_defect(&ladder);
    if ladder_profile.classification != profile.classification {
        flags.oracle_mismatch = true;
        notes.push(format!(
            "linear part gives {}, υ ladder gives {}",
            profile.classification, ladder_profile.classification
        ));
    }
    for n in 0..=horizon {
        let low = profile.by_degree[n].first().is_some_and(|&h| h != 0);
        if low != (ladder.rank(n, 1) != 0) {
            flags.oracle_mismatch = true;
            notes.push(format!("H_{n}(lin) in degree {n} and υ^1_{n} disagree on vanishing"));
        }
    }
    if ladder_profile.nonzero != profile.nonzero {
        notes.push(format!(
            "nonzero indices: linear part [{}], υ ladder [{}]",
            list(&profile.nonzero),
            list(&ladder_profile.nonzero)
        ));
    }

    let mut generation = Vec::with_capacity(horizon + 1);
    for i in 0..=horizon {
        let holds = linear_generation(&res, i)?;
        if holds != (ladder.rank(i, 1) == 0) {
            flags.bridge_mismatch = true;
            notes.push(format!("linear generation condition at i = {i} is {holds} but rank υ^1_{i} = {}", ladder.rank(i, 1)));
        }
        generation.push(holds);
    }

    let last = match profile.classification {
        Classification::LdZeroUpToHorizon => 0,
        Classification::DefectAtLeast(d) => d,
    };
    let mut equality_checked = Vec::new();
    for d in (last + 1)..horizon {
        if ladder.rank(d, 1) != 0 {
            flags.equality_violation = true;
            notes.push(format!("υ^1_{d} != 0 although H_i(lin) = 0 for {d} <= i <= {horizon}"));
        }
        if !lin.mstar_equality_check(&slices[d])? {
            flags.equality_violation = true;
            notes.push(format!("m* Z_{d} != m* B_{d}"));
        }
        equality_checked.push(d);
    }

    let second_rung = if algebra.nilpotency_index() <= 4 {
        let outcomes = second_rung_implication(&res, &ladder)?;
        for o in outcomes.iter().filter(|o| !o.holds()) {
            if o.index > last {
                flags.second_rung_violation = true;
                notes.push(format!("υ^1_{0} = 0 but υ^2_{0} != 0", o.index));
            } else {
                notes.push(format!("υ^1_{0} = 0 but υ^2_{0} != 0, with H_{last}(lin) != 0", o.index));
            }
        }
        Some(outcomes)
    } else {
        None
    };
    flags.silence_tail = profile.silence_tail;

    Ok(AlgebraReport {
        schema: REPORT_SCHEMA,
        presentation: presentation.map(RingPresentation::to_text),
        field: algebra.field().spec().to_string(),
        dim: algebra.dim(),
        filtration_dims: algebra.filtration_dims(),
        graded_dims: algebra.graded_dims(),
        nilpotency_index: algebra.nilpotency_index(),
        horizon,
        betti,
        homology: profile.by_degree.clone(),
        homology_totals: profile.totals.clone(),
        lin_nonzero: profile.nonzero.clone(),
        classification: profile.classification,
        tail_length: profile.tail_length,
        upsilon_ranks: ladder.rank_table(),
        tor_dims: ladder.tor_table(),
        upsilon_nonzero: ladder_profile.nonzero,
        ladder_classification: ladder_profile.classification,
        linear_generation: generation,
        second_rung,
        equality_checked,
        flags,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::PrimeField;
    use crate::presentation::{build_algebra, parse_presentation, GroebnerLimits};

    fn check(text: &str, horizon: usize) -> AlgebraReport {
        let p = parse_presentation(text).unwrap();
        let f = PrimeField::new(p.field.characteristic()).unwrap();
        let a = Arc::new(build_algebra(&f, &p, &GroebnerLimits::default()).unwrap());
        full_check(&a, Some(&p), horizon, &ResolutionLimits::default()).unwrap()
    }

    #[test]
    fn koszul_report() {
        let r = check("vars x y\nideal x^2, x*y, y^2\n", 5);
        assert_eq!(r.classification, Classification::LdZeroUpToHorizon);
        assert_eq!(r.ladder_classification, Classification::LdZeroUpToHorizon);
        assert_eq!(r.betti, vec![1, 2, 4, 8, 16, 32]);
        assert_eq!(r.equality_checked, vec![1, 2, 3, 4]);
        assert_eq!(r.flags, Flags::default());
    }

    #[test]
    fn quartic_truncation_report() {
        let r = check("vars x\nideal x^4\n", 6);
        assert_eq!(r.classification, Classification::DefectAtLeast(6));
        assert!(!r.flags.silence_tail);
        assert!(!r.flags.any_violation(), "{:?}", r.notes);
        assert!(r.second_rung.is_some());
    }

    #[test]
    fn field_report() {
        let r = check("vars x\nideal x\n", 3);
        assert_eq!(r.dim, 1);
        assert_eq!(r.betti, vec![1, 0, 0, 0]);
        assert_eq!(r.classification, Classification::LdZeroUpToHorizon);
        assert!(!r.flags.any_violation(), "{:?} {:?}", r.flags, r.notes);
    }
}
