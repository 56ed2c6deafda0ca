//! Command implementations. Each returns a JSON report, a text rendering
//! and an exit code.

use serde_json::{json, Value};
use wgr_core::automorphism::Elementary;
use wgr_core::groebner::gin;
use wgr_core::hilbert::{
    frobenius_number, gap_bound, hilbert_table, quasi_polynomial, stabilization_report, Convention,
};
use wgr_core::lex::{first_non_lex_degree, lexify, lexify_all_orders, lexify_ideal};
use wgr_core::polarization::{completely_polarize, polarize};
use wgr_core::resolution::free_resolution;
use wgr_core::stability::{is_t_fixed, stability_violation};
use wgr_core::{
    Error, GradedAutomorphism, Ideal, LexifyOutcome, MonomialIdeal, OrderKind, Polynomial, RingDescriptor, TermOrder,
};

use crate::parse::print_ring;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            code: EXIT_OK,
        }
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

/// Exit code for a library error.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::GenericityFailure(_) | Error::NoConvergence(_) => EXIT_INCONCLUSIVE,
        _ => EXIT_INPUT,
    }
}

/// Settings shared by all commands.
pub struct Context {
    pub ring: RingDescriptor,
    pub ideal: Option<Ideal>,
    pub order: TermOrder,
    pub lex: TermOrder,
    pub seed: u64,
    pub trials: Option<usize>,
    pub max_degree: Option<u64>,
}

impl Context {
    pub fn new(
        ring: RingDescriptor,
        ideal: Option<Ideal>,
        kind: OrderKind,
        priority: Option<Vec<usize>>,
        seed: u64,
        trials: Option<usize>,
        max_degree: Option<u64>,
    ) -> Result<Self, Error> {
        let priority = priority.unwrap_or_else(|| (0..ring.nvars()).collect());
        let order = TermOrder::with_priority(kind, &ring, priority.clone())?;
        let lex = TermOrder::with_priority(OrderKind::Lex, &ring, priority)?;
        Ok(Context {
            ring,
            ideal,
            order,
            lex,
            seed,
            trials,
            max_degree,
        })
    }

    fn ideal(&self) -> Result<&Ideal, Error> {
        self.ideal
            .as_ref()
            .ok_or_else(|| Error::Precondition("this command needs an ideal".into()))
    }

    fn monomial_ideal(&self) -> Result<MonomialIdeal, Error> {
        self.ideal()?
            .as_monomial_ideal()
            .ok_or_else(|| Error::Precondition("this command needs a monomial ideal".into()))
    }

    fn names(&self) -> &[String] {
        self.ring.names()
    }

    /// Generators in canonical order: descending lex under the variable priority.
    fn monomials(&self, ideal: &MonomialIdeal) -> Vec<String> {
        let lex = TermOrder::with_priority(OrderKind::Lex, ideal.ring(), self.priority_in(ideal.ring()))
            .expect("a permutation");
        ideal
            .sorted_generators(&lex)
            .iter()
            .map(|m| m.display_with(ideal.ring().names()).to_string())
            .collect()
    }

    /// The variable priority, extended to a ring with more variables by
    /// keeping the extra ones in place after the known ones.
    fn priority_in(&self, ring: &RingDescriptor) -> Vec<usize> {
        if ring.nvars() == self.ring.nvars() {
            return self.lex.priority().to_vec();
        }
        (0..ring.nvars()).collect()
    }

    fn poly(&self, p: &Polynomial, order: &TermOrder) -> String {
        p.display_with(self.names(), order).to_string()
    }
}

fn generator_report(name: &str, ctx: &Context, ideal: &MonomialIdeal, order: &TermOrder) -> Report {
    let gens = ctx.monomials(ideal);
    let text = format!("{name}: ({})", gens.join(", "));
    Report::ok(
        json!({ "command": name, "order": order.kind().name(), "generators": gens }),
        text,
    )
}

fn convention_name(c: Convention) -> &'static str {
    match c {
        Convention::Ideal => "ideal",
        Convention::Quotient => "quotient",
    }
}

pub fn hilbert(ctx: &Context, from: u64, to: u64, convention: Convention) -> Result<Report, Error> {
    if from > to {
        return Err(Error::Precondition(format!("empty degree range {from}..{to}")));
    }
    let initial = ctx.ideal()?.initial_ideal(&ctx.order);
    let table = hilbert_table(&initial, from, to, convention);
    let rows: Vec<Value> = table.iter().map(|(d, v)| json!({ "degree": d, "value": v })).collect();
    let text = table
        .iter()
        .map(|(d, v)| format!("{d}\t{v}"))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report::ok(
        json!({ "command": "hilbert", "convention": convention_name(convention), "table": rows }),
        text,
    ))
}

pub fn series(ctx: &Context) -> Result<Report, Error> {
    let hs = ctx.ideal()?.hilbert_series();
    let den: Vec<Value> = hs
        .denominator()
        .iter()
        .map(|(q, l)| json!({ "weight": q, "exponent": l }))
        .collect();
    Ok(Report::ok(
        json!({
            "command": "series",
            "numerator": hs.numerator(),
            "denominator": den,
            "pole_order": hs.pole_order(),
        }),
        hs.to_string(),
    ))
}

pub fn quasipoly(ctx: &Context) -> Result<Report, Error> {
    let qp = quasi_polynomial(&ctx.ideal()?.hilbert_series())?;
    let comps: Vec<Value> = qp
        .polynomials()
        .iter()
        .enumerate()
        .map(|(r, p)| json!({ "residue": r, "coefficients": p.iter().map(|c| c.to_string()).collect::<Vec<_>>() }))
        .collect();
    Ok(Report::ok(
        json!({
            "command": "quasipoly",
            "period": qp.period(),
            "threshold": qp.threshold(),
            "pole_order": qp.pole_order(),
            "components": comps,
        }),
        qp.to_string(),
    ))
}

pub fn gin_cmd(ctx: &Context) -> Result<Report, Error> {
    let g = gin(ctx.ideal()?, &ctx.order, ctx.seed, ctx.trials.unwrap_or(2))?;
    Ok(generator_report("gin", ctx, &g, &ctx.order))
}

pub fn initial(ctx: &Context) -> Result<Report, Error> {
    let i = ctx.ideal()?.initial_ideal(&ctx.order);
    Ok(generator_report("initial", ctx, &i, &ctx.order))
}

pub fn groebner(ctx: &Context) -> Result<Report, Error> {
    let gb = ctx.ideal()?.groebner_basis(&ctx.order);
    let elems: Vec<String> = gb.elements().iter().map(|p| ctx.poly(p, &ctx.order)).collect();
    let text = elems.join("\n");
    Ok(Report::ok(
        json!({ "command": "groebner", "order": ctx.order.kind().name(), "basis": elems }),
        text,
    ))
}

pub fn stable(ctx: &Context) -> Result<Report, Error> {
    let i = ctx.monomial_ideal()?;
    let Some(v) = stability_violation(&i) else {
        return Ok(Report::ok(
            json!({ "command": "stable", "strongly_stable": true, "violation": null }),
            "strongly stable".into(),
        ));
    };
    let m = |x: &wgr_core::Monomial| x.display_with(ctx.names()).to_string();
    let json = json!({
        "command": "stable",
        "strongly_stable": false,
        "violation": { "generator": m(&v.generator), "missing": m(&v.missing) },
    });
    let text = format!("not strongly stable: {}", v.display_with(ctx.names()));
    Ok(Report::ok(json, text).with_code(EXIT_NEGATIVE))
}

pub fn tfixed(ctx: &Context) -> Result<Report, Error> {
    let fixed = is_t_fixed(ctx.ideal()?, ctx.trials.unwrap_or(32), ctx.seed);
    let r = Report::ok(
        json!({ "command": "tfixed", "t_fixed": fixed }),
        if fixed { "fixed by T" } else { "not fixed by T" }.into(),
    );
    Ok(if fixed { r } else { r.with_code(EXIT_NEGATIVE) })
}

pub fn depth(ctx: &Context) -> Result<Report, Error> {
    let table = free_resolution(ctx.ideal()?, true)?.betti();
    let pd = table
        .projective_dimension()
        .ok_or_else(|| Error::Precondition("R/I is zero".into()))?;
    let depth = ctx.ring.nvars() - pd;
    Ok(Report::ok(
        json!({ "command": "depth", "depth": depth, "projective_dimension": pd }),
        format!("depth R/I = {depth}"),
    ))
}

pub fn reg(ctx: &Context) -> Result<Report, Error> {
    let table = free_resolution(ctx.ideal()?, true)?.betti();
    let (ri, rq) = (table.of_ideal().regularity(), table.regularity());
    let show = |r: Option<i64>| r.map_or("undefined".to_string(), |x| x.to_string());
    Ok(Report::ok(
        json!({ "command": "reg", "ideal": ri, "quotient": rq }),
        format!("reg I = {}\nreg R/I = {}", show(ri), show(rq)),
    ))
}

pub fn betti(ctx: &Context, convention: Convention) -> Result<Report, Error> {
    let res = free_resolution(ctx.ideal()?, true)?;
    let table = match convention {
        Convention::Quotient => res.betti(),
        Convention::Ideal => res.betti().of_ideal(),
    };
    let triples: Vec<[u64; 3]> = table.entries().map(|(i, j, b)| [i as u64, j, b as u64]).collect();
    Ok(Report::ok(
        json!({
            "command": "betti",
            "module": if convention == Convention::Ideal { "I" } else { "R/I" },
            "triples": triples,
        }),
        table.to_string().trim_end().to_string(),
    ))
}

pub fn islex(ctx: &Context) -> Result<Report, Error> {
    let i = ctx.monomial_ideal()?;
    let fail = first_non_lex_degree(&i, &ctx.lex);
    let r = Report::ok(
        json!({ "command": "islex", "lexicographic": fail.is_none(), "first_failing_degree": fail }),
        match fail {
            None => "lexicographic".into(),
            Some(d) => format!("not lexicographic: degree {d} is not a lexsegment"),
        },
    );
    Ok(if fail.is_none() { r } else { r.with_code(EXIT_NEGATIVE) })
}

fn outcome_json(ctx: &Context, o: &LexifyOutcome, order: &TermOrder) -> (Value, String, i32) {
    match o {
        LexifyOutcome::Lexifiable(l) => {
            let sorted = l.sorted_generators(order);
            let gens: Vec<String> = sorted.iter().map(|m| m.display_with(ctx.names()).to_string()).collect();
            let text = format!("lexifiable: ({})", gens.join(", "));
            (json!({ "status": "lexifiable", "generators": gens }), text, EXIT_OK)
        }
        LexifyOutcome::NotLexifiable {
            degree,
            hilbert,
            candidate,
        } => (
            json!({ "status": "not_lexifiable", "degree": degree, "hilbert": hilbert, "candidate": candidate }),
            format!("not lexifiable: in degree {degree}, H_I = {hilbert} but the candidate needs {candidate}"),
            EXIT_NEGATIVE,
        ),
        LexifyOutcome::Inconclusive { max_degree } => (
            json!({ "status": "inconclusive", "max_degree": max_degree }),
            format!("inconclusive up to degree {max_degree}"),
            EXIT_INCONCLUSIVE,
        ),
    }
}

pub fn lexify_cmd(ctx: &Context, all_orders: bool) -> Result<Report, Error> {
    let ideal = ctx.ideal()?;
    if !all_orders {
        let outcome = match ideal.as_monomial_ideal() {
            Some(m) => lexify(&m, &ctx.lex, ctx.max_degree),
            None => lexify_ideal(ideal, &ctx.lex, ctx.max_degree),
        };
        let (mut v, text, code) = outcome_json(ctx, &outcome, &ctx.lex);
        v["command"] = json!("lexify");
        return Ok(Report { json: v, text, code });
    }
    let initial = ideal.initial_ideal(&ctx.order);
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut codes = Vec::new();
    for (order, outcome) in lexify_all_orders(&initial, ctx.max_degree) {
        let names: Vec<&str> = order.priority().iter().map(|&v| ctx.names()[v].as_str()).collect();
        let (mut v, text, code) = outcome_json(ctx, &outcome, &order);
        v["var_order"] = json!(names);
        rows.push(v);
        lines.push(format!("{}: {text}", names.join(">")));
        codes.push(code);
    }
    let code = if codes.contains(&EXIT_OK) {
        EXIT_OK
    } else if codes.contains(&EXIT_INCONCLUSIVE) {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_NEGATIVE
    };
    Ok(Report {
        json: json!({ "command": "lexify", "orders": rows }),
        text: lines.join("\n"),
        code,
    })
}

pub fn polarize_cmd(ctx: &Context, once: bool) -> Result<Report, Error> {
    let i = ctx.monomial_ideal()?;
    if once {
        let p = polarize(&i);
        let gens = ctx.monomials(&p.ideal);
        let origin: Vec<&str> = p.origin.iter().map(|&v| ctx.names()[v].as_str()).collect();
        let text = format!("ring {}\n({})", print_ring(&p.ring), gens.join(", "));
        return Ok(Report::ok(
            json!({ "command": "polarize", "ring": print_ring(&p.ring), "generators": gens, "origin": origin }),
            text,
        ));
    }
    let pol = completely_polarize(&i, &ctx.lex, ctx.seed, ctx.trials.unwrap_or(2))?;
    Ok(generator_report("polarize", ctx, &pol, &ctx.lex))
}

pub fn gapbound(ctx: &Context) -> Report {
    let g = gap_bound(&ctx.ring);
    Report::ok(json!({ "command": "gapbound", "gap_bound": g }), g.to_string())
}

pub fn frobenius(ctx: &Context) -> Result<Report, Error> {
    let f = frobenius_number(&ctx.ring)?;
    Ok(Report::ok(
        json!({ "command": "frobenius", "frobenius": f }),
        f.to_string(),
    ))
}

fn elementary_text(ctx: &Context, e: &Elementary) -> String {
    let n = ctx.names();
    match e {
        Elementary::Diagonal { var, scalar } => format!("{} -> {}*{}", n[*var], scalar, n[*var]),
        Elementary::Triangular { var, source, scalar } => {
            format!("{} -> {} + {}*{}", n[*var], n[*var], scalar, n[*source])
        }
        Elementary::NonLinear { var, monomial, scalar } => {
            format!("{} -> {} + {}*{}", n[*var], n[*var], scalar, monomial.display_with(n))
        }
    }
}

pub fn decompose(ctx: &Context, images: Vec<Polynomial>) -> Result<Report, Error> {
    let phi = GradedAutomorphism::from_images(&ctx.ring, images)?;
    match phi.decompose() {
        Ok(factors) => {
            let list: Vec<String> = factors.iter().map(|e| elementary_text(ctx, e)).collect();
            let text = if list.is_empty() {
                "identity".to_string()
            } else {
                list.join("\n")
            };
            Ok(Report::ok(
                json!({ "command": "decompose-aut", "in_t": true, "factors": list }),
                text,
            ))
        }
        Err(Error::NotInT) => Ok(Report::ok(
            json!({ "command": "decompose-aut", "in_t": false, "factors": [] }),
            "not in T".into(),
        )
        .with_code(EXIT_NEGATIVE)),
        Err(e) => Err(e),
    }
}

pub fn stabilization(ctx: &Context) -> Result<Report, Error> {
    let i = ctx.monomial_ideal()?;
    let limit = ctx
        .max_degree
        .unwrap_or_else(|| 2 * (i.max_generator_degree() + ctx.ring.lcm_weight() + gap_bound(&ctx.ring)));
    let report = stabilization_report(&i, limit);
    let r = Report::ok(
        json!({
            "command": "stabilization",
            "limit": limit,
            "degree": report.degree,
            "failures": report.failures.len(),
        }),
        match report.degree {
            Some(d) => format!("I_r = I_{d} R_(r-{d}) for {d} <= r <= {limit}"),
            None => format!("no stabilization degree up to {limit}"),
        },
    );
    Ok(if report.degree.is_some() {
        r
    } else {
        r.with_code(EXIT_INCONCLUSIVE)
    })
}
