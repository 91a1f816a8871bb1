//! Command-line front end: group facts, multiplier dimensions by every
//! route, word classes, extendability verdicts, and relation-calculus
//! verification, as reproducible text or JSON reports.
//!
//! Exit codes: 0 success, 2 usage error, 3 resource limit, 4 a violated
//! relation or disagreeing cross-check (never expected; it would signal
//! an implementation bug).

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use uschur::cob::{is_extendable, parse_surface, Verdict};
use uschur::cohom::{coboundary_space, cocycle_space, h2};
use uschur::error::Error;
use uschur::grp::{
    catalog_group, catalog_names, catalog_presentation, parse_permutation_file,
    parse_presentation, FiniteGroup, Presentation, DEFAULT_COSET_LIMIT, DENSE_LIMIT,
};
use uschur::hopf::hopf_multiplier;
use uschur::mult::{bogomolov_report, schur_unoriented};
use uschur::relcalc::{
    class_coordinates, experimental_kt17, for_each_instance, parse_uword, relations, InstanceMode,
};

#[derive(Parser)]
#[command(name = "uschur", version, about = "Unoriented Schur and Bogomolov multipliers of finite groups", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, generators, involutions and mod-2 abelianization of a group.
    Group {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The unoriented Schur multiplier M(G;Z2) = H^2(G;F2).
    Schur {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The unoriented Bogomolov multiplier by both routes.
    Bogomolov {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The multiplier through the square-cover formula (presentations only).
    Hopf {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Class of a word (syntax: O[x,y] U[x,y] S[z], ^-1) in M and B0.
    WordClass {
        #[command(flatten)]
        source: Source,
        /// The word, e.g. "O[a,c] O[ab,c]".
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Extendability verdict for a free surface action.
    Extendable {
        #[command(flatten)]
        source: Source,
        /// Surface spec: "orientable g=1 pairs=(x,y)" or
        /// "nonorientable k=2 z=(z1;z2)".
        #[arg(long)]
        surface: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify the relation calculus on a group (exhaustive up to order 16,
    /// seeded sampling above).
    VerifyRelations {
        #[command(flatten)]
        source: Source,
        /// Seed for sampled instantiation on larger groups.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample size per relation for larger groups.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the catalog group names.
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exactly one group source.
#[derive(Args)]
struct Source {
    /// Catalog name, e.g. cyclic:12, dihedral:4, smallgroup:64:182.
    #[arg(long)]
    group: Option<String>,
    /// Presentation file (lines: "gens: a b", "rel: a b a^-1 b^-1").
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Permutation generator file (one per line, "(1 2)(3 4)").
    #[arg(long)]
    perms: Option<PathBuf>,
    /// Coset cap for presentations.
    #[arg(long, default_value_t = DEFAULT_COSET_LIMIT)]
    coset_limit: usize,
    /// Largest group order accepted.
    #[arg(long, default_value_t = DENSE_LIMIT)]
    max_order: usize,
}

struct Resolved {
    group: Arc<FiniteGroup>,
    name: String,
    presentation: Option<Presentation>,
}

impl Source {
    fn resolve(&self) -> Result<Resolved, Error> {
        let picked =
            [self.group.is_some(), self.presentation.is_some(), self.perms.is_some()]
                .iter()
                .filter(|&&b| b)
                .count();
        if picked != 1 {
            return Err(Error::usage(
                "exactly one of --group, --presentation, --perms is required",
            ));
        }
        let resolved = if let Some(name) = &self.group {
            Resolved {
                group: catalog_group(name)?,
                name: name.clone(),
                presentation: catalog_presentation(name).ok(),
            }
        } else if let Some(path) = &self.presentation {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
            let pres = parse_presentation(&text)?;
            let (group, _) = FiniteGroup::from_presentation(&pres, self.coset_limit)?;
            Resolved {
                group,
                name: path.display().to_string(),
                presentation: Some(pres),
            }
        } else {
            let path = self.perms.as_ref().expect("picked == 1");
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
            let perms = parse_permutation_file(&text)?;
            let names: Vec<String> = (1..=perms.len()).map(|i| format!("g{i}")).collect();
            let group = FiniteGroup::from_permutations(&perms, &names, self.max_order + 1)?;
            Resolved {
                group,
                name: path.display().to_string(),
                presentation: None,
            }
        };
        if resolved.group.order() > self.max_order {
            return Err(Error::Resource {
                what: format!("group order {}", resolved.group.order()),
                limit: self.max_order,
            });
        }
        Ok(resolved)
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Resource { .. } => 3,
        Error::Parse(_) | Error::UnknownCatalog(_) | Error::Usage(_) => 2,
        Error::Invariant(_) | Error::GroupMismatch(_) => 4,
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
        Format::Text => println!("{}", text()),
    }
}

#[derive(Serialize)]
struct GroupReport {
    group: String,
    order: usize,
    abelianization_mod2: usize,
    num_involutions: usize,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct SchurReport {
    group: String,
    order: usize,
    dim_h2: usize,
    dim_z2: usize,
    dim_b2: usize,
}

#[derive(Serialize)]
struct HopfReport {
    group: String,
    order: usize,
    cover_order: usize,
    kernel_order: usize,
    dim_multiplier: usize,
    generator_words: Vec<String>,
}

#[derive(Serialize)]
struct WordReport {
    group: String,
    word: String,
    canonical_image: String,
    in_kprime: bool,
    m_coordinates: Option<String>,
    trivial_in_m: Option<bool>,
    b0_coordinates: Option<String>,
    trivial_in_b0: Option<bool>,
}

#[derive(Serialize)]
struct RelationFamilyReport {
    name: String,
    family: String,
    instances: usize,
    violations: usize,
}

#[derive(Serialize)]
struct VerifyReport {
    group: String,
    order: usize,
    mode: String,
    seed: u64,
    families: Vec<RelationFamilyReport>,
    experimental_kt17_instances: usize,
    experimental_kt17_holds: bool,
    all_pass: bool,
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Group { source, format } => {
            let r = source.resolve()?;
            let report = GroupReport {
                group: r.name.clone(),
                order: r.group.order(),
                abelianization_mod2: r.group.abelianization_mod2(),
                num_involutions: r.group.involutions().len(),
                generators: r
                    .group
                    .named_elements()
                    .iter()
                    .map(|(n, _)| n.clone())
                    .collect(),
            };
            emit(format, &report, || {
                format!(
                    "group {}\norder {}\nabelianization mod 2: dimension {}\ninvolutions: {}\nnamed generators: {}",
                    report.group,
                    report.order,
                    report.abelianization_mod2,
                    report.num_involutions,
                    report.generators.join(" ")
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Schur { source, format } => {
            let r = source.resolve()?;
            let z2 = cocycle_space(&r.group);
            let b2 = coboundary_space(&r.group);
            let basis = schur_unoriented(&r.group);
            let report = SchurReport {
                group: r.name.clone(),
                order: r.group.order(),
                dim_h2: basis.dim_h2(),
                dim_z2: z2.rank(),
                dim_b2: b2.rank(),
            };
            emit(format, &report, || {
                format!(
                    "group {} (order {})\ndim M(G;Z2) = dim H^2(G;F2) = {}\ndim Z^2 = {}, dim B^2 = {}",
                    report.group, report.order, report.dim_h2, report.dim_z2, report.dim_b2
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Bogomolov { source, format } => {
            let r = source.resolve()?;
            let (report, _) = bogomolov_report(&r.group, &r.name)?;
            emit(format, &report, || {
                format!(
                    "group {} (order {})\ndim H^2 = {}\nfunctional rank = {}\ndim B0 = {}\nroutes agree: {}\nannihilator basis: [{}]",
                    report.group,
                    report.order,
                    report.dim_h2,
                    report.functional_rank,
                    report.dim_b0,
                    report.routes_agree,
                    report.annihilator_basis.join(", ")
                )
            });
            if report.routes_agree {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: the two Bogomolov routes disagree");
                Ok(ExitCode::from(4))
            }
        }
        Command::Hopf { source, format } => {
            let r = source.resolve()?;
            let pres = r.presentation.as_ref().ok_or_else(|| {
                Error::usage("hopf needs a presentation source (--presentation or a catalog name with one)")
            })?;
            let h = hopf_multiplier(pres, source.coset_limit)?;
            let report = HopfReport {
                group: r.name.clone(),
                order: h.cover.base.order(),
                cover_order: h.cover.cover.order(),
                kernel_order: h.cover.kernel_r0.len(),
                dim_multiplier: h.dim,
                generator_words: h.generator_words.clone(),
            };
            emit(format, &report, || {
                format!(
                    "group {} (order {})\nsquare cover order {} with kernel of order {}\ndim M(G;Z2) = {}\ngenerator words: {}",
                    report.group,
                    report.order,
                    report.cover_order,
                    report.kernel_order,
                    report.dim_multiplier,
                    report.generator_words.join(" ; ")
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::WordClass {
            source,
            word,
            format,
        } => {
            let r = source.resolve()?;
            let w = parse_uword(&r.group, &word)?;
            let image = w.canonical_image(&r.group);
            let in_kprime = image == r.group.identity();
            let report = if in_kprime {
                let basis = h2(&r.group);
                let coords = class_coordinates(&w, &basis)?;
                let (_, ctx) = bogomolov_report(&r.group, &r.name)?;
                let (b0_coords, trivial_b0) = ctx.word_class_in_b0(&w)?;
                WordReport {
                    group: r.name.clone(),
                    word: w.display(&r.group),
                    canonical_image: r.group.label(image).to_string(),
                    in_kprime,
                    trivial_in_m: Some(coords.is_zero()),
                    m_coordinates: Some(coords.to_bitstring()),
                    b0_coordinates: Some(b0_coords.to_bitstring()),
                    trivial_in_b0: Some(trivial_b0),
                }
            } else {
                WordReport {
                    group: r.name.clone(),
                    word: w.display(&r.group),
                    canonical_image: r.group.label(image).to_string(),
                    in_kprime,
                    m_coordinates: None,
                    trivial_in_m: None,
                    b0_coordinates: None,
                    trivial_in_b0: None,
                }
            };
            emit(format, &report, || {
                let mut out = format!(
                    "group {}\nword {}\ncanonical image: {}\nin K': {}",
                    report.group, report.word, report.canonical_image, report.in_kprime
                );
                if let (Some(m), Some(tm), Some(b), Some(tb)) = (
                    &report.m_coordinates,
                    report.trivial_in_m,
                    &report.b0_coordinates,
                    report.trivial_in_b0,
                ) {
                    out.push_str(&format!(
                        "\nM coordinates: {m} (trivial: {tm})\nB0 coordinates: {b} (trivial: {tb})"
                    ));
                }
                out
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Extendable {
            source,
            surface,
            format,
        } => {
            let r = source.resolve()?;
            let s = parse_surface(&r.group, &surface)?;
            let (_, ctx) = bogomolov_report(&r.group, &r.name)?;
            let verdict = is_extendable(&s, &ctx)?;
            let report = verdict.report(s.total_euler());
            emit(format, &report, || {
                format!(
                    "group {}\nsurface {}\ntotal Euler characteristic {} (mod 2: {})\nverdict: {}{}",
                    r.name,
                    surface,
                    s.total_euler(),
                    report.chi_mod2,
                    report.verdict,
                    match &verdict {
                        Verdict::Obstructed(coords) =>
                            format!(" with B0 coordinates {}", coords.to_bitstring()),
                        _ => String::new(),
                    }
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyRelations {
            source,
            seed,
            samples,
            format,
        } => {
            let r = source.resolve()?;
            let basis = h2(&r.group);
            let exhaustive = r.group.order() <= 16;
            let mut families = Vec::new();
            let mut all_pass = true;
            for rel in relations() {
                let mode = if exhaustive {
                    InstanceMode::Exhaustive
                } else {
                    InstanceMode::Sampled {
                        seed,
                        count: samples,
                    }
                };
                let mut violations = 0usize;
                let instances = for_each_instance(&r.group, rel, mode, |lhs, rhs| {
                    if !uschur::relcalc::verify_relation_pair(lhs, rhs, &basis)? {
                        violations += 1;
                    }
                    Ok(())
                })?;
                if violations > 0 {
                    all_pass = false;
                }
                families.push(RelationFamilyReport {
                    name: rel.name.to_string(),
                    family: format!("{:?}", rel.family),
                    instances,
                    violations,
                });
            }
            // The conjectured relation: reported, never asserted.
            let mut kt_holds = true;
            let mut kt_instances = 0usize;
            {
                let n = r.group.order();
                let mut run = |t: &[usize]| {
                    let (lhs, rhs) = experimental_kt17(&r.group, t);
                    kt_instances += 1;
                    if !uschur::relcalc::verify_relation_pair(&lhs, &rhs, &basis)
                        .unwrap_or(false)
                    {
                        kt_holds = false;
                    }
                };
                if exhaustive {
                    for z in 0..n {
                        for x in 0..n {
                            for y in 0..n {
                                run(&[z, x, y]);
                            }
                        }
                    }
                } else {
                    let mut state = seed ^ 0x6b7a_1c2d;
                    for _ in 0..samples {
                        let t = [
                            (uschur::grp::splitmix(&mut state) % n as u64) as usize,
                            (uschur::grp::splitmix(&mut state) % n as u64) as usize,
                            (uschur::grp::splitmix(&mut state) % n as u64) as usize,
                        ];
                        run(&t);
                    }
                }
            }
            let report = VerifyReport {
                group: r.name.clone(),
                order: r.group.order(),
                mode: if exhaustive {
                    "exhaustive".into()
                } else {
                    format!("sampled:{samples}")
                },
                seed,
                families,
                experimental_kt17_instances: kt_instances,
                experimental_kt17_holds: kt_holds,
                all_pass,
            };
            emit(format, &report, || {
                let mut out = format!(
                    "group {} (order {}), {} instantiation, seed {}\n",
                    report.group, report.order, report.mode, report.seed
                );
                for f in &report.families {
                    out.push_str(&format!(
                        "  {:<40} [{}] instances {:>7} violations {}\n",
                        f.name, f.family, f.instances, f.violations
                    ));
                }
                out.push_str(&format!(
                    "  experimental kt17: {} instances, holds: {}\n",
                    report.experimental_kt17_instances, report.experimental_kt17_holds
                ));
                out.push_str(&format!("all pass: {}", report.all_pass));
                out
            });
            if report.all_pass {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: relation calculus violated");
                Ok(ExitCode::from(4))
            }
        }
        Command::Catalog => {
            for name in catalog_names() {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
