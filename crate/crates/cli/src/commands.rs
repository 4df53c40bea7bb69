use serde::Serialize;
use serde_json::{json, Value};

use convexity::builders::{build, BuilderSpec};
use convexity::colorful::find_rainbow_empty;
use convexity::corpus::random_closure;
use convexity::doc::{parse_families, parse_family, parse_set, parse_sets, SpaceDoc};
use convexity::fractional::fh_stats;
use convexity::helly::helly_number;
use convexity::hypergraph::{
    clique_count, clique_number, find_complete_missing_tuple, intersection_hypergraph, Hypergraph,
};
use convexity::partitions::colorful_params;
use convexity::radon::{find_k_partition, partition_number, radon_number};
use convexity::transversal::{
    intersection_closure, pq_check, tau, tau_star, weak_net, NetRequest, SetSystem,
};
use convexity::{bounds, closure_from_generators, Budget, ConvexitySpace, Multiset};

use crate::args::{Command, SpaceArg};
use crate::input::Inputs;
use crate::report::CliError;

type Outcome = Result<Value, CliError>;

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("results serialize")
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Lib(e.into()))
}

fn load_space(inputs: &mut Inputs, arg: &SpaceArg) -> Result<ConvexitySpace, CliError> {
    let text = inputs.load("space", &arg.space)?;
    Ok(SpaceDoc::parse(&text)?.to_space()?)
}

fn load_system(inputs: &mut Inputs, arg: &str) -> Result<SetSystem, CliError> {
    let text = inputs.load("system", arg)?;
    parse(&text)
}

fn describe(space: &ConvexitySpace) -> Value {
    json!({
        "ground_size": space.ground_size(),
        "convex_set_count": space.len(),
        "space": to_json(&SpaceDoc::of_space(space)),
    })
}

pub fn execute(
    cmd: &Command,
    seed: Option<u64>,
    inputs: &mut Inputs,
    budget: &mut Budget,
) -> Outcome {
    match cmd {
        Command::Validate(arg) => {
            let space = load_space(inputs, arg)?;
            let mut out = describe(&space);
            out["valid"] = json!(true);
            Ok(out)
        }
        Command::Closure {
            ground_size,
            generators,
            size_cap,
        } => {
            let text = inputs.load("generators", generators)?;
            let lists: Vec<Vec<usize>> = parse(&text)?;
            let gens = parse_sets(&lists, *ground_size)?;
            Ok(describe(&closure_from_generators(
                *ground_size,
                &gens,
                *size_cap,
            )?))
        }
        Command::Build { builder, .. } => {
            let space = match builder {
                Some(doc) => {
                    let text = inputs.load("builder", doc)?;
                    build(&parse::<BuilderSpec>(&text)?)?
                }
                None => random_closure(seed.unwrap_or(0))?,
            };
            Ok(describe(&space))
        }
        Command::Hull { space, set } => {
            let space = load_space(inputs, space)?;
            let text = inputs.load("set", set)?;
            let y = parse_set(&text, space.ground_size())?;
            Ok(json!({"set": y, "hull": space.hull(y)}))
        }
        Command::Radon(arg) => {
            let space = load_space(inputs, arg)?;
            let r = radon_number(&space, budget)?;
            Ok(json!({"r2": r.value, "largest_unsplittable": r.largest_unsplittable}))
        }
        Command::PartitionNumber { space, k, multiset } => {
            let space = load_space(inputs, space)?;
            match multiset {
                Some(doc) => {
                    let text = inputs.load("multiset", doc)?;
                    let y: Multiset = parse(&text)?;
                    if let Some(index) = y.max_element().filter(|&m| m >= space.ground_size()) {
                        return Err(convexity::Error::IndexOutOfRange {
                            index,
                            ground_size: space.ground_size(),
                        }
                        .into());
                    }
                    let witness = find_k_partition(&space, &y, *k, budget)?;
                    if let Some(w) = &witness {
                        w.validate(&space, &y, *k)?;
                    }
                    Ok(json!({"k": k, "multiset": y, "witness": witness}))
                }
                None => Ok(to_json(&partition_number(&space, *k, budget)?)),
            }
        }
        Command::Helly(arg) => {
            let space = load_space(inputs, arg)?;
            let h = helly_number(&space, budget)?;
            h.certificate.validate(&space)?;
            Ok(to_json(&h))
        }
        Command::Verify { space, kmax } => {
            let space = load_space(inputs, space)?;
            let report = bounds::verify_bounds(&space, *kmax, budget)?;
            report.certificates.helly.validate(&space)?;
            Ok(to_json(&report))
        }
        Command::Hypergraph {
            hypergraph,
            space,
            family,
            k,
            m,
        } => {
            let h = match (hypergraph, space, family) {
                (Some(doc), _, _) => {
                    let text = inputs.load("hypergraph", doc)?;
                    parse::<Hypergraph>(&text)?
                }
                (None, Some(space), Some(family)) => {
                    let space = load_space(
                        inputs,
                        &SpaceArg {
                            space: space.clone(),
                        },
                    )?;
                    let text = inputs.load("family", family)?;
                    let family = parse_family(&text, space.ground_size())?;
                    let k = k.ok_or_else(|| {
                        CliError::Usage("--k is required with --space/--family".into())
                    })?;
                    intersection_hypergraph(&space, &family, k, budget)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "give --hypergraph, or --space with --family".into(),
                    ))
                }
            };
            let (omega, clique) = clique_number(&h, budget)?;
            let mut out = json!({
                "hypergraph": h,
                "edge_count": h.edges().len(),
                "clique_number": omega,
                "max_clique": clique,
            });
            if let Some(m) = *m {
                let count = if m >= h.uniformity() {
                    Value::String(clique_count(&h, m, budget)?.to_string())
                } else {
                    Value::Null
                };
                let tuple = find_complete_missing_tuple(&h, m, budget)?;
                if let Some(t) = &tuple {
                    t.validate(&h)?;
                }
                out["m"] = json!(m);
                out["clique_count"] = count;
                out["missing_tuple"] = to_json(&tuple);
            }
            Ok(out)
        }
        Command::ColorfulM { r } => Ok(to_json(&colorful_params(*r)?)),
        Command::Rainbow { space, families, r } => {
            let space = load_space(inputs, space)?;
            let text = inputs.load("families", families)?;
            let families = parse_families(&text, space.ground_size())?;
            let w = find_rainbow_empty(&space, &families, *r, budget)?;
            w.validate(&families)?;
            Ok(to_json(&w))
        }
        Command::FhStats {
            space,
            family,
            m,
            k,
        } => {
            let space = load_space(inputs, space)?;
            let text = inputs.load("family", family)?;
            let family = parse_family(&text, space.ground_size())?;
            let stats = fh_stats(&space, &family, *m, budget)?;
            let mut out = to_json(&stats);
            // c_m and ω of the k-uniform intersection hypergraph.
            let k = k.unwrap_or(*m);
            let (c_m, omega) = if k >= 2 && k <= family.len() {
                let h = intersection_hypergraph(&space, &family, k, budget)?;
                let (omega, _) = clique_number(&h, budget)?;
                let count = if *m >= k {
                    Value::String(clique_count(&h, *m, budget)?.to_string())
                } else {
                    Value::Null
                };
                (count, json!(omega))
            } else {
                (Value::Null, Value::Null)
            };
            out["k"] = json!(k);
            out["c_m"] = c_m;
            out["omega"] = omega;
            Ok(out)
        }
        Command::Tau { system } => {
            let system = load_system(inputs, system)?;
            let (t, hit) = tau(&system, budget)?;
            Ok(json!({"tau": t, "transversal": hit}))
        }
        Command::TauStar { system } => {
            let system = load_system(inputs, system)?;
            let ft = tau_star(&system, budget)?;
            ft.validate(&system)?;
            Ok(to_json(&ft))
        }
        Command::WeakNet {
            space,
            request,
            system,
        } => {
            let space = load_space(inputs, space)?;
            let text = inputs.load("request", request)?;
            let req: NetRequest = parse(&text)?;
            let family = system
                .as_deref()
                .map(|s| load_system(inputs, s))
                .transpose()?;
            let net = weak_net(&space, &req, family.as_ref(), budget)?;
            if !net.heavy.is_hit_by(net.net) {
                return Err(
                    convexity::Error::WitnessInvalid("net misses a heavy set".into()).into(),
                );
            }
            Ok(to_json(&net))
        }
        Command::ClosureCap { system, size_cap } => {
            let system = load_system(inputs, system)?;
            Ok(to_json(&intersection_closure(&system, *size_cap)?))
        }
        Command::PqCheck {
            space,
            system,
            p,
            q,
        } => {
            let space = load_space(inputs, space)?;
            let system = load_system(inputs, system)?;
            Ok(to_json(&pq_check(&space, &system, *p, *q, budget)?))
        }
    }
}
