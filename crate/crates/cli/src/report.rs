//! The `reproduce` pipeline and its report document.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use qrlab::codes::{
    assmus_mattson_check, dual, extended_qr_code, low_weight_codewords, macwilliams_transform,
    minimum_distance, Cache,
};
use qrlab::designs::{
    derived_design, design_from_codewords, incidence_profile, linear_span, residual_at_point,
    verify_design,
};
use qrlab::groups::{
    design_automorphism_group, is_s_homogeneous, orbits_on_subsets, preserves_design, psl2,
};
use qrlab::{Design, LinearCode, PermutationGroup};

pub const EXPECTED_WEIGHTS: [(usize, u64); 14] = [
    (0, 1),
    (10, 1722),
    (12, 10619),
    (14, 49815),
    (16, 157563),
    (18, 341530),
    (20, 487326),
    (22, 487326),
    (24, 341530),
    (26, 157563),
    (28, 49815),
    (30, 10619),
    (32, 1722),
    (42, 1),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub p: u64,
    pub long: bool,
    pub skip_aut: bool,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub result: Value,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub parameters: Parameters,
    pub cache_dir: String,
    pub steps: Vec<Step>,
    pub passed: bool,
}

impl ReportDocument {
    pub fn render_text(&self) -> String {
        let width = self.steps.iter().map(|s| s.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format!(
                "{}  {:<width$}  {:>8.2}s  {}\n",
                if s.passed { "PASS" } else { "FAIL" },
                s.name,
                s.seconds,
                s.detail
            ));
        }
        let failed = self.steps.iter().filter(|s| !s.passed).count();
        out.push_str(&format!("{} steps, {failed} failed\n", self.steps.len()));
        out
    }
}

/// A step body yields pass/fail, a one-line summary and its raw result.
type StepOutput = anyhow::Result<(bool, String, Value)>;

struct Runner {
    steps: Vec<Step>,
    verbose: bool,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce() -> StepOutput) {
        if self.verbose {
            eprintln!("[qrlab] {name} ...");
        }
        let start = Instant::now();
        let (passed, detail, result) = match f() {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e:#}"), Value::Null),
        };
        self.steps.push(Step {
            name: name.to_string(),
            passed,
            detail,
            result,
            seconds: (start.elapsed().as_secs_f64() * 1000.0).round() / 1000.0,
        });
    }
}

fn pairs(wd: &qrlab::WeightDistribution) -> Vec<(usize, u64)> {
    wd.nonzero().collect()
}

pub fn reproduce(params: Parameters, cache: &Cache, verbose: bool) -> ReportDocument {
    let mut runner = Runner {
        steps: Vec::new(),
        verbose,
    };
    if params.p == 41 {
        reproduce_41(&mut runner, &params, cache);
    }
    if params.long {
        runner.run("length 74 minimum words", length_74);
    }
    let passed = !runner.steps.is_empty() && runner.steps.iter().all(|s| s.passed);
    ReportDocument {
        tool: "qrlab".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        parameters: params,
        cache_dir: cache.dir().display().to_string(),
        steps: runner.steps,
        passed,
    }
}

fn reproduce_41(runner: &mut Runner, params: &Parameters, cache: &Cache) {
    let mut code: Option<LinearCode> = None;
    runner.run("extended QR(41)", || {
        let (spec, c) = extended_qr_code(41)?;
        let ok = (c.len(), c.dimension()) == (42, 21);
        let detail = format!(
            "[{},{}], g = {}",
            c.len(),
            c.dimension(),
            spec.generator_poly
        );
        code = Some(c);
        Ok((ok, detail, serde_json::to_value(&spec)?))
    });
    let Some(c) = code else { return };

    runner.run("weight distribution", || {
        let wd = cache.weight_distribution(&c)?;
        Ok((
            pairs(&wd) == EXPECTED_WEIGHTS,
            wd.to_string(),
            json!(pairs(&wd)),
        ))
    });

    let mut design: Option<Design> = None;
    runner.run("3-design of weight-10 words", || {
        let words = cache.codewords_of_weight(&c, 10)?;
        let d = design_from_codewords(&words, 42)?;
        let v = verify_design(&d, 3)?;
        let ok = v
            .params()
            .is_some_and(|p| (p.t, p.v, p.k, p.lambda, p.b, p.r) == (3, 42, 10, 18, 1722, 410));
        let detail = match v.params() {
            Some(p) => p.to_string(),
            None => format!("not a 3-design: {}", incidence_profile(&d, 3)?),
        };
        design = Some(d);
        Ok((ok, detail, serde_json::to_value(&v)?))
    });
    let Some(d) = design else { return };

    runner.run("Assmus-Mattson", || {
        let wd = cache.weight_distribution(&c)?;
        let dual_wd = macwilliams_transform(&wd, c.dimension())?;
        let am = assmus_mattson_check(42, 10, 3, &dual_wd)?;
        let ok = !am.applies && am.nonzero_dual_weights == 12 && am.bound == 7;
        let detail = format!(
            "{} nonzero dual weights <= 39, bound {}: {}",
            am.nonzero_dual_weights,
            am.bound,
            if am.applies {
                "applies"
            } else {
                "does not apply"
            }
        );
        Ok((ok, detail, serde_json::to_value(am)?))
    });

    let mut psl: Option<PermutationGroup> = None;
    runner.run("PSL(2,41)", || {
        let g = psl2(41)?;
        let order = g.order_u128();
        let mut preserved = true;
        for s in g.generators() {
            preserved &= preserves_design(s, &d)?;
        }
        let ok = order == Some(34440) && preserved;
        let detail = format!("order {}, generators preserve D: {preserved}", g.order());
        psl = Some(g);
        Ok((
            ok,
            detail,
            json!({ "order": order, "generators_preserve_design": preserved }),
        ))
    });

    let mut group: Option<PermutationGroup> = None;
    if !params.skip_aut {
        runner.run("automorphism group of D", || {
            let aut = design_automorphism_group(&d);
            let mut contains = true;
            if let Some(g) = &psl {
                for s in g.generators() {
                    contains &= aut.contains(s)?;
                }
            }
            let ok = aut.order_u128() == Some(34440) && contains && psl.is_some();
            let detail = format!("order {}, contains PSL(2,41): {contains}", aut.order());
            let generators: Vec<&[usize]> = aut.generators().iter().map(|g| g.images()).collect();
            let result = json!({
                "order": aut.order_u128(),
                "contains_psl": contains,
                "generators": generators,
            });
            group = Some(aut);
            Ok((ok, detail, result))
        });
    }

    let (label, acting) = match (&group, &psl) {
        (Some(g), _) => ("Aut(D)", Some(g)),
        (None, Some(g)) => ("PSL(2,41)", Some(g)),
        _ => ("", None),
    };
    if let Some(g) = acting {
        runner.run(&format!("orbits of {label} on triples"), || {
            let triples = orbits_on_subsets(g, 3)?;
            let three = is_s_homogeneous(g, 3)?;
            let two = is_s_homogeneous(g, 2)?;
            let ok = triples.sizes() == vec![5740, 5740] && !three && two;
            let sizes: Vec<String> = triples.sizes().iter().map(|s| s.to_string()).collect();
            let detail = format!(
                "{} orbits: {}; 3-homogeneous: {three}, 2-homogeneous: {two}",
                triples.orbits.len(),
                sizes.join(", ")
            );
            Ok((
                ok,
                detail,
                json!({ "triples": triples, "homogeneous_3": three, "homogeneous_2": two }),
            ))
        });
    }

    runner.run("derived and residual at infinity", || {
        let der = verify_design(&derived_design(&d, 41)?, 2)?;
        let res = verify_design(&residual_at_point(&d, 41)?, 2)?;
        let ok = der
            .params()
            .is_some_and(|p| (p.v, p.k, p.lambda, p.b) == (41, 9, 18, 410))
            && res
                .params()
                .is_some_and(|p| (p.v, p.k, p.lambda, p.b) == (41, 10, 72, 1312));
        let show = |v: &qrlab::Verification| match v.params() {
            Some(p) => p.to_string(),
            None => "not a 2-design".into(),
        };
        let detail = format!("{}; {}", show(&der), show(&res));
        Ok((ok, detail, json!({ "derived": der, "residual": res })))
    });

    runner.run("linear span of D", || {
        let span = linear_span(&d);
        let equal = span.rref_generator() == c.rref_generator();
        let detail = format!(
            "dimension {}, equals extended QR(41): {}",
            span.dimension(),
            yes(equal)
        );
        Ok((
            span.dimension() == 21 && equal,
            detail,
            json!({ "dimension": span.dimension(), "equals_code": equal }),
        ))
    });

    runner.run("formal self-duality", || {
        let wd = cache.weight_distribution(&c)?;
        let dual_wd = cache.weight_distribution(&dual(&c))?;
        let fixed = macwilliams_transform(&wd, 21)? == wd;
        let ok = dual_wd == wd && fixed;
        let detail = format!(
            "dual distribution equal: {}, MacWilliams fixed point: {}",
            yes(dual_wd == wd),
            yes(fixed)
        );
        Ok((
            ok,
            detail,
            json!({ "dual_weights": pairs(&dual_wd), "fixed_point": fixed }),
        ))
    });
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn length_74() -> StepOutput {
    let (_, c) = extended_qr_code(73)?;
    eprintln!("[qrlab] certifying the minimum distance of [74,37] ...");
    let md = minimum_distance(&c)?.ok_or_else(|| anyhow::anyhow!("zero code"))?;
    eprintln!(
        "[qrlab] d = {}; collecting minimum-weight words ...",
        md.distance
    );
    let mut sets = low_weight_codewords(&c, md.distance)?;
    let words = sets.swap_remove(md.distance);
    let d = design_from_codewords(&words, 74)?;
    let v = verify_design(&d, 3)?;
    let profile = incidence_profile(&d, 3)?;
    let ok = !v.is_design() && !profile.is_constant();
    let detail = format!(
        "d = {}, {} words, {}: {profile}",
        md.distance,
        words.len(),
        if v.is_design() {
            "a 3-design"
        } else {
            "not a 3-design"
        }
    );
    Ok((
        ok,
        detail,
        json!({
            "minimum_distance": md,
            "words": words.len(),
            "is_design": v.is_design(),
            "profile": profile,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_roundtrips_through_json() {
        let dir = tempfile::tempdir().unwrap();
        let params = Parameters {
            p: 41,
            long: false,
            skip_aut: true,
            threads: 1,
        };
        let doc = reproduce(params, &Cache::new(dir.path()), false);
        assert!(doc.passed, "{}", doc.render_text());
        let text = serde_json::to_string(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }
}
