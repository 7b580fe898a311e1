use std::fmt::Write;

use serde::Serialize;

use lndfact::degmod::{DegreeModule, DegreeResolution, GradedRingTruncation};
use lndfact::factor::{CanonicalFactorization, Level, ModificationStep};
use lndfact::lnd::{KernelCertificate, LocalSlice};
use lndfact::poly::Polynomial;
use lndfact::subalg::SubalgebraPresentation;

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

#[derive(Serialize)]
pub struct Named {
    pub name: String,
    pub element: String,
}

#[derive(Serialize)]
pub struct SliceReport {
    pub r: String,
    pub f: String,
}

impl From<&LocalSlice> for SliceReport {
    fn from(s: &LocalSlice) -> Self {
        SliceReport {
            r: s.r.to_string(),
            f: s.f.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct CheckReport {
    #[serde(skip)]
    pub ring: Vec<String>,
    pub witnesses: Vec<u32>,
    pub certified: bool,
}

#[derive(Serialize)]
pub struct CertificateReport {
    pub annihilated: bool,
    pub saturated: bool,
    pub contains_dixmier_images: Option<bool>,
}

impl From<&KernelCertificate> for CertificateReport {
    fn from(c: &KernelCertificate) -> Self {
        CertificateReport {
            annihilated: c.annihilated,
            saturated: c.saturated,
            contains_dixmier_images: c.contains_dixmier_images,
        }
    }
}

#[derive(Serialize)]
pub struct KernelReport {
    pub ring: Vec<String>,
    pub source: String,
    pub generators: Vec<Named>,
    pub relations: Vec<String>,
    pub slice: Option<SliceReport>,
    pub certificate: Option<CertificateReport>,
    pub certified: bool,
}

pub fn named(a: &SubalgebraPresentation) -> Vec<Named> {
    a.names()
        .iter()
        .zip(a.generators())
        .map(|(n, g)| Named {
            name: n.clone(),
            element: g.to_string(),
        })
        .collect()
}

pub fn relations(a: &SubalgebraPresentation) -> Vec<String> {
    strings(a.relation_ideal().generators())
}

#[derive(Serialize)]
pub struct GeneratorDegree {
    pub element: String,
    pub degree: u32,
}

#[derive(Serialize)]
pub struct DegmodReport {
    pub n: usize,
    pub generators: Vec<GeneratorDegree>,
    pub d_basis: bool,
    pub degrees_complete: bool,
    pub chain_steps: usize,
    pub certified: bool,
}

impl From<&DegreeModule> for DegmodReport {
    fn from(m: &DegreeModule) -> Self {
        DegmodReport {
            n: m.n,
            generators: m
                .generators()
                .iter()
                .zip(&m.degrees)
                .map(|(g, d)| GeneratorDegree {
                    element: g.to_string(),
                    degree: *d,
                })
                .collect(),
            d_basis: m.d_basis_check(),
            degrees_complete: m.degrees_complete(),
            chain_steps: m.steps,
            certified: m.certified,
        }
    }
}

#[derive(Serialize)]
pub struct IdealReport {
    pub n: usize,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct AlgebraReport {
    pub n: usize,
    pub generators: Vec<Named>,
    pub relations: Vec<String>,
}

#[derive(Serialize)]
pub struct ResolutionReport {
    pub jumps: Vec<usize>,
    pub index: usize,
    pub complete: bool,
    pub algebras: Vec<AlgebraReport>,
}

impl From<&DegreeResolution> for ResolutionReport {
    fn from(r: &DegreeResolution) -> Self {
        ResolutionReport {
            jumps: r.jumps.clone(),
            index: r.index(),
            complete: r.complete,
            algebras: r
                .algebras
                .iter()
                .map(|(n, a)| AlgebraReport {
                    n: *n,
                    generators: named(a),
                    relations: relations(a),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct LevelReport {
    pub n: usize,
    pub generators: Vec<Named>,
    pub relations: Vec<String>,
    pub restricted: Vec<Option<String>>,
    pub fixed_points: Vec<String>,
}

impl From<&Level> for LevelReport {
    fn from(l: &Level) -> Self {
        LevelReport {
            n: l.n,
            generators: named(&l.algebra),
            relations: strings(&l.relations),
            restricted: l
                .restricted
                .iter()
                .map(|p| p.as_ref().map(|p| p.to_string()))
                .collect(),
            fixed_points: strings(l.fixed_points.generators()),
        }
    }
}

#[derive(Serialize)]
pub struct StepReport {
    pub from: usize,
    pub to: usize,
    pub divisor: String,
    pub center: Vec<String>,
    pub new_generators: Vec<String>,
    pub pool_element: String,
    pub exponents: Vec<u32>,
    pub equivariant: Option<bool>,
    pub extends: Option<bool>,
    pub exceptional: Vec<String>,
    pub principal: bool,
}

fn step_report(from: usize, to: usize, s: &ModificationStep) -> StepReport {
    StepReport {
        from,
        to,
        divisor: s.triple.divisor().to_string(),
        center: strings(s.triple.center()),
        new_generators: strings(&s.new_generators),
        pool_element: s.pool_element.to_string(),
        exponents: s.exponents.clone(),
        equivariant: s.equivariant,
        extends: s.extends,
        exceptional: strings(&s.exceptional),
        principal: s.principal,
    }
}

#[derive(Serialize)]
pub struct FirstLevelReport {
    pub slice: SliceReport,
    pub cylinder: bool,
}

#[derive(Serialize)]
pub struct BirationalityReport {
    pub variable: String,
    pub exponent: u32,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct FactorizeReport {
    pub jumps: Vec<usize>,
    pub index: usize,
    pub complete: bool,
    pub pool: Vec<String>,
    pub first_level: Option<FirstLevelReport>,
    pub levels: Vec<LevelReport>,
    pub steps: Vec<StepReport>,
    pub birationality: Vec<BirationalityReport>,
    pub certified: bool,
}

impl FactorizeReport {
    pub fn new(cf: &CanonicalFactorization, names: &[String]) -> Self {
        let jumps = &cf.resolution.jumps;
        FactorizeReport {
            jumps: jumps.clone(),
            index: cf.index(),
            complete: cf.resolution.complete,
            pool: strings(&cf.pool),
            first_level: cf.first_level.as_ref().map(|f| FirstLevelReport {
                slice: (&f.slice).into(),
                cylinder: f.cylinder,
            }),
            levels: cf.levels.iter().map(Into::into).collect(),
            steps: cf
                .steps
                .iter()
                .enumerate()
                .map(|(k, s)| step_report(jumps[k + 1], jumps[k + 2], s))
                .collect(),
            birationality: cf
                .birationality
                .iter()
                .map(|b| BirationalityReport {
                    variable: names[b.variable].clone(),
                    exponent: b.exponent,
                    verified: b.verified,
                })
                .collect(),
            certified: cf.is_certified(),
        }
    }
}

#[derive(Serialize)]
pub struct WeightedGenerator {
    pub element: String,
    pub weight: usize,
}

#[derive(Serialize)]
pub struct GradedReport {
    pub ideals: Vec<IdealReport>,
    pub generators: Vec<WeightedGenerator>,
}

impl From<&GradedRingTruncation> for GradedReport {
    fn from(g: &GradedRingTruncation) -> Self {
        GradedReport {
            ideals: g
                .ideals
                .iter()
                .enumerate()
                .map(|(n, i)| IdealReport {
                    n,
                    generators: strings(i),
                })
                .collect(),
            generators: g
                .generators
                .iter()
                .map(|(a, n)| WeightedGenerator {
                    element: a.to_string(),
                    weight: *n,
                })
                .collect(),
        }
    }
}

fn list(out: &mut String, title: &str, items: &[String]) {
    let _ = writeln!(out, "{title}:");
    for i in items {
        let _ = writeln!(out, "  {i}");
    }
}

fn named_lines(out: &mut String, gens: &[Named]) {
    for g in gens {
        let _ = writeln!(out, "  {} = {}", g.name, g.element);
    }
}

pub trait Text {
    fn text(&self) -> String;
}

impl Text for CheckReport {
    fn text(&self) -> String {
        let mut out = String::from("locally nilpotent: verified\n");
        for (v, w) in self.ring.iter().zip(&self.witnesses) {
            let _ = writeln!(out, "  D^{w}({v}) = 0");
        }
        out
    }
}

impl Text for KernelReport {
    fn text(&self) -> String {
        let mut out = format!("kernel ({}):\n", self.source);
        named_lines(&mut out, &self.generators);
        if !self.relations.is_empty() {
            list(&mut out, "relations", &self.relations);
        }
        if let Some(s) = &self.slice {
            let _ = writeln!(out, "local slice: r = {}, Dr = {}", s.r, s.f);
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(
                out,
                "annihilated: {}, saturated: {}, Dixmier images: {}",
                c.annihilated,
                c.saturated,
                c.contains_dixmier_images
                    .map_or("unchecked".into(), |b| b.to_string())
            );
        }
        let _ = writeln!(out, "certified: {}", self.certified);
        out
    }
}

impl Text for DegmodReport {
    fn text(&self) -> String {
        let mut out = format!("F_{}:\n", self.n);
        for g in &self.generators {
            let _ = writeln!(out, "  [{}] {}", g.degree, g.element);
        }
        let _ = writeln!(
            out,
            "D-basis: {}, degrees 0..{}: {}, chain steps: {}",
            self.d_basis, self.n, self.degrees_complete, self.chain_steps
        );
        out
    }
}

impl Text for IdealReport {
    fn text(&self) -> String {
        let mut out = String::new();
        list(&mut out, &format!("I_{}", self.n), &self.generators);
        out
    }
}

impl Text for ResolutionReport {
    fn text(&self) -> String {
        let jumps: Vec<String> = self.jumps.iter().map(|j| j.to_string()).collect();
        let mut out = format!("jumps: {{{}}}\nindex: {}\n", jumps.join(", "), self.index);
        for a in &self.algebras {
            let _ = writeln!(out, "B_{}:", a.n);
            named_lines(&mut out, &a.generators);
            for r in &a.relations {
                let _ = writeln!(out, "  relation {r}");
            }
        }
        if !self.complete {
            out.push_str("incomplete: the chain did not reach B\n");
        }
        out
    }
}

impl Text for FactorizeReport {
    fn text(&self) -> String {
        let jumps: Vec<String> = self.jumps.iter().map(|j| j.to_string()).collect();
        let mut out = format!("jumps: {{{}}}\nindex: {}\n", jumps.join(", "), self.index);
        if let Some(f) = &self.first_level {
            let _ = writeln!(
                out,
                "local slice r = {}, Dr = {}, F_1 = A + A r: {}",
                f.slice.r, f.slice.f, f.cylinder
            );
        }
        for l in &self.levels {
            let _ = writeln!(out, "B_{}:", l.n);
            named_lines(&mut out, &l.generators);
            for r in &l.relations {
                let _ = writeln!(out, "  relation {r}");
            }
            let _ = writeln!(out, "  fixed points: ({})", l.fixed_points.join(", "));
        }
        for s in &self.steps {
            let _ = writeln!(
                out,
                "B_{} = B_{}[f^-1 I], f = {}, I = ({}), equivariant: {}",
                s.to,
                s.from,
                s.divisor,
                s.center.join(", "),
                s.equivariant.map_or("unknown".into(), |b| b.to_string())
            );
        }
        for b in &self.birationality {
            let _ = writeln!(
                out,
                "(Dr)^{} {} lies in A[r]: {}",
                b.exponent, b.variable, b.verified
            );
        }
        let _ = writeln!(out, "certified: {}", self.certified);
        out
    }
}

impl Text for GradedReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for i in &self.ideals {
            out.push_str(&i.text());
        }
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| format!("({}) t^{}", g.element, g.weight))
            .collect();
        let _ = writeln!(out, "Gr generators: A[{}]", gens.join(", "));
        out
    }
}
