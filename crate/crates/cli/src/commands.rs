use std::fmt::Write as _;
use std::path::Path;

use oddballoon::ballooning::{balloon_with_cycles, decomposition_family, division_family, profile};
use oddballoon::extremal::{
    build_family, check_corollary, theorem_bounds, ConstructionRecipe, CorollaryKind, Side,
};
use oddballoon::graph::{
    bipartition, components, independent_covering, io, is_bipartite, make_named, matching_number,
    vertex_cover_number, Graph, NamedGraph,
};
use oddballoon::oracle::{certify_free, turan_oracle, OracleCache};
use oddballoon::{Error, Result};
use serde_json::{json, Value};

use crate::args::{
    BalloonArgs, BoundsArgs, CheckFreeArgs, ConstructArgs, CorollaryArg, GraphArg, OracleArgs,
    SideArg, VerifyArgs,
};
use crate::input::{parse_graph, spec};
use crate::report::Outcome;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn outcome(command: &'static str, inputs: Value, output: Value, text: String) -> Outcome {
    Outcome {
        command,
        inputs,
        output,
        text,
        graphs: Vec::new(),
        passed: true,
    }
}

pub fn invariants(args: &GraphArg) -> Result<Outcome> {
    let g = parse_graph(&args.graph)?;
    let bip = is_bipartite(&g);
    let (cov, bp) = if bip {
        (Some(independent_covering(&g)?), Some(bipartition(&g)?))
    } else {
        (None, None)
    };
    let output = json!({
        "graph6": io::to_graph6(&g),
        "order": g.order(),
        "size": g.size(),
        "degrees": g.degrees(),
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
        "components": components(&g),
        "bipartite": bip,
        "matching_number": matching_number(&g),
        "vertex_cover_number": vertex_cover_number(&g),
        "independent_covering": cov.as_ref().map(|c| json!({
            "gamma": c.gamma,
            "coverings": c.coverings.iter().map(|&s| oddballoon::graph::bits::to_vec(s)).collect::<Vec<_>>(),
        })),
        "bipartition": bp.map(|b| json!({
            "a": b.a_vertices(),
            "b": b.b_vertices(),
            "min_degree_in_a": b.min_degree_in_a(&g),
        })),
    });
    let mut text = format!(
        "order {}  size {}  Δ {}  α′ {}  β {}\n",
        g.order(),
        g.size(),
        g.max_degree(),
        matching_number(&g),
        vertex_cover_number(&g)
    );
    match (&cov, &bp) {
        (Some(c), Some(b)) => {
            let _ = writeln!(text, "γ {}  A {:?}  B {:?}", c.gamma, b.a_vertices(), b.b_vertices());
        }
        _ => text.push_str("not bipartite\n"),
    }
    let mut o = outcome("invariants", json!({ "graph": io::to_graph6(&g) }), output, text);
    o.graphs.push(("G".into(), g));
    Ok(o)
}

fn balloon_inputs(a: &BalloonArgs) -> Result<(oddballoon::ballooning::BallooningSpec, Value)> {
    let s = spec(&a.graph, a.t, a.lengths.as_deref())?;
    let inputs = to_value(&s.to_json());
    Ok((s, inputs))
}

pub fn balloon(args: &BalloonArgs) -> Result<Outcome> {
    let (s, inputs) = balloon_inputs(args)?;
    let b = balloon_with_cycles(&s)?;
    let output = json!({
        "order": b.graph.order(),
        "size": b.graph.size(),
        "graph6": io::to_graph6(&b.graph),
        "cycles": b.cycles,
    });
    let text = format!(
        "H(t): order {}, size {}, {} cycles\n{}\n",
        b.graph.order(),
        b.graph.size(),
        b.cycles.len(),
        io::to_graph6(&b.graph)
    );
    let mut o = outcome("balloon", inputs, output, text);
    o.graphs.push(("balloon".into(), b.graph));
    Ok(o)
}

pub fn divisions(args: &GraphArg) -> Result<Outcome> {
    let g = parse_graph(&args.graph)?;
    let fam = division_family(&g)?;
    let graphs: Vec<Value> = fam
        .iter()
        .map(|(_, d)| json!({ "graph6": io::to_graph6(d), "order": d.order(), "size": d.size() }))
        .collect();
    let mut text = format!("{} divisions\n", fam.len());
    for (_, d) in &fam {
        let _ = writeln!(text, "{}  order {}", io::to_graph6(d), d.order());
    }
    let output = json!({ "count": fam.len(), "graphs": graphs });
    let mut o = outcome("divisions", json!({ "graph": io::to_graph6(&g) }), output, text);
    o.graphs = fam
        .into_iter()
        .enumerate()
        .map(|(i, (_, d))| (format!("D{i}"), d))
        .collect();
    Ok(o)
}

pub fn decompose(args: &BalloonArgs) -> Result<Outcome> {
    let (s, inputs) = balloon_inputs(args)?;
    let fam = decomposition_family(&s)?;
    let prof = profile(&fam)?;
    let mut text = format!("{} members\n", fam.members.len());
    for m in &fam.members {
        let _ = writeln!(text, "  {}  γ {}  β {}", io::to_graph6(&m.graph), m.gamma, m.beta);
    }
    let _ = writeln!(
        text,
        "q̃ = {}  k = {}  B̃ = {{{}}}",
        prof.q_tilde,
        prof.k,
        prof.b_tilde.iter().map(io::to_graph6).collect::<Vec<_>>().join(", ")
    );
    let output = json!({ "family": to_value(&fam.to_doc()), "profile": to_value(&prof.to_doc()) });
    let mut o = outcome("decompose", inputs, output, text);
    o.graphs = fam
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| (format!("M{i}"), m.graph.clone()))
        .collect();
    Ok(o)
}

pub fn bounds(args: &BoundsArgs) -> Result<Outcome> {
    let (s, mut inputs) = balloon_inputs(&args.balloon)?;
    inputs["n"] = json!(args.n);
    let r = theorem_bounds(&s, args.n)?;
    let mut text = format!(
        "q̃ = {}  k = {}\nlower {}  upper {}{}\n",
        r.q_tilde,
        r.k,
        r.lower,
        r.upper,
        if r.tight { "  (tight)" } else { "" }
    );
    let _ = writeln!(text, "{} recipe(s) for the upper construction", r.recipes.len());
    let mut o = outcome("bounds", inputs, to_value(&r.to_doc()), text);
    o.graphs = r
        .recipes
        .iter()
        .enumerate()
        .map(|(i, rec)| build_family(rec).map(|g| (format!("F{i}"), g)))
        .collect::<Result<_>>()?;
    Ok(o)
}

pub fn construct(args: &ConstructArgs) -> Result<Outcome> {
    if args.q == 0 {
        return Err(Error::InvalidParameter("q must be at least 1".into()));
    }
    let inner = match &args.inner {
        Some(s) => parse_graph(s)?,
        None if args.q == 1 => Graph::empty(0)?,
        None => make_named(NamedGraph::Complete(args.q - 1))?,
    };
    let side = match args.side {
        SideArg::Larger => Side::Larger,
        SideArg::Smaller => Side::Smaller,
    };
    let recipe = ConstructionRecipe::new(args.n, args.q, args.k, inner, side)?;
    let g = build_family(&recipe)?;
    let output = json!({
        "recipe": to_value(&recipe.to_doc()),
        "graph6": io::to_graph6(&g),
        "order": g.order(),
        "size": g.size(),
        "expected_edges": recipe.expected_edges(),
    });
    let text = format!(
        "F(n={}, q={}, k={}): {} edges (formula {})\n{}\n",
        args.n,
        args.q,
        args.k,
        g.size(),
        recipe.expected_edges(),
        io::to_graph6(&g)
    );
    let inputs = to_value(&recipe.to_doc());
    let mut o = outcome("construct", inputs, output, text);
    o.passed = g.size() == recipe.expected_edges();
    o.graphs.push(("F".into(), g));
    Ok(o)
}

pub fn check_free(args: &CheckFreeArgs) -> Result<Outcome> {
    let host = parse_graph(&args.graph)?;
    let (pattern, pattern_spec) = match args.t {
        Some(t) => {
            let s = spec(&args.forbid, t, args.lengths.as_deref())?;
            (oddballoon::ballooning::balloon(&s)?, Some(s.to_json()))
        }
        None => (parse_graph(&args.forbid)?, None),
    };
    let cert = certify_free(&host, &pattern);
    let text = format!(
        "{}: host order {} size {}, pattern order {} size {}, {} nodes{}\n",
        if cert.is_free() { "free" } else { "contains" },
        cert.host_order,
        cert.host_size,
        cert.pattern_order,
        cert.pattern_size,
        cert.stats.nodes,
        cert.stats
            .settled_by
            .map(|r| format!(", settled by {r:?}"))
            .unwrap_or_default()
    );
    let inputs = json!({
        "graph": io::to_graph6(&host),
        "forbid": io::to_graph6(&pattern),
        "pattern_spec": pattern_spec.as_ref().map(to_value),
    });
    Ok(outcome("check-free", inputs, to_value(&cert), text))
}

pub fn oracle(args: &OracleArgs, cache_dir: Option<&Path>) -> Result<Outcome> {
    let family: Vec<Graph> = args.forbid.iter().map(|s| parse_graph(s)).collect::<Result<_>>()?;
    let result = match cache_dir {
        Some(dir) => OracleCache::new(dir).turan(args.n, &family)?.0,
        None => turan_oracle(args.n, &family)?,
    };
    let forbid: Vec<String> = family.iter().map(io::to_graph6).collect();
    let mut text = format!("ex({}, {{{}}}) = {}\n", args.n, forbid.join(", "), result.max_edges);
    for g in &result.extremal {
        let _ = writeln!(text, "  {}", io::to_graph6(g));
    }
    let inputs = json!({ "n": args.n, "forbid": forbid });
    let mut o = outcome("oracle", inputs, to_value(&result.to_doc()), text);
    o.graphs = result
        .extremal
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("X{i}"), g.clone()))
        .collect();
    Ok(o)
}

fn corollary_kind(args: &VerifyArgs) -> Result<CorollaryKind> {
    let need = |x: Option<usize>, flag: &str| {
        x.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required for this corollary")))
    };
    Ok(match args.corollary {
        CorollaryArg::Star => CorollaryKind::Star { a: need(args.a, "a")? },
        CorollaryArg::Path => CorollaryKind::Path { m: need(args.m, "m")? },
        CorollaryArg::EvenCycle => CorollaryKind::EvenCycle { m: need(args.m, "m")? },
        CorollaryArg::GoodTree => {
            let g = args
                .graph
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter("--graph is required for good-tree".into()))?;
            CorollaryKind::GoodTree { tree: parse_graph(g)? }
        }
    })
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let kind = corollary_kind(args)?;
    let check = check_corollary(&kind, args.t, args.n)?;
    let spec = oddballoon::ballooning::BallooningSpec::new(kind.base()?, args.t)?;
    let h = oddballoon::ballooning::balloon(&spec)?;
    let g = build_family(&check.value.recipe)?;
    let cert = certify_free(&g, &h);
    let formula_matched = g.size() == check.value.edges;
    let passed = formula_matched && check.consistent && cert.is_free();
    let b = &check.bounds;
    let output = json!({
        "corollary": to_value(&check.value.to_doc()),
        "bounds": {
            "q_tilde": b.q_tilde,
            "k": b.k,
            "b_tilde": b.b_tilde.iter().map(io::to_graph6).collect::<Vec<_>>(),
            "lower": b.lower,
            "upper": b.upper,
            "tight": b.tight,
            "attained": check.attained,
        },
        "construction": { "graph6": io::to_graph6(&g), "order": g.order(), "edges": g.size() },
        "certificate": {
            "verdict": to_value(&cert.verdict),
            "settled_by": to_value(&cert.stats.settled_by),
            "nodes": cert.stats.nodes,
        },
        "formula_matched": formula_matched,
        "consistent_with_bounds": check.consistent,
        "freeness_certified": cert.is_free(),
        "passed": passed,
    });
    let text = format!(
        "{} corollary, n = {}, t = {}\nclosed form {}  construction {} edges  bounds [{}, {}]\nfreeness {}  formula {}  bounds {}\n{}\n",
        kind.name(),
        args.n,
        args.t,
        check.value.edges,
        g.size(),
        b.lower,
        b.upper,
        if cert.is_free() { "certified" } else { "FAILED" },
        if formula_matched { "matched" } else { "MISMATCH" },
        if check.consistent { "consistent" } else { "INCONSISTENT" },
        if passed { "PASS" } else { "FAIL" },
    );
    let inputs = json!({
        "corollary": kind.name(),
        "a": args.a,
        "m": args.m,
        "graph": args.graph.as_deref().map(parse_graph).transpose()?.map(|g| io::to_graph6(&g)),
        "t": args.t,
        "n": args.n,
    });
    let mut o = outcome("verify", inputs, output, text);
    o.passed = passed;
    o.graphs.push(("F".into(), g));
    Ok(o)
}
