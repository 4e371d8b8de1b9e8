use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::model::{Property, SpectrumModel, Value, Verdict};
use super::nuclear::{hurewicz_zero_test, nuclear_test};
use super::ClassifyError;

/// Default truncation used by classification when none is requested.
pub const DEFAULT_MAX_DEGREE: i32 = 40;

/// One derived fact: a property value with the degree range its evidence
/// covers and a single provenance line.
#[derive(Clone, Debug)]
struct Fact {
    property: Property,
    value: Value,
    range: Option<(i32, i32)>,
    citations: Vec<String>,
}

impl Fact {
    fn new(property: Property, value: Value, range: Option<(i32, i32)>, cite: String) -> Fact {
        Fact {
            property,
            value,
            range,
            citations: vec![cite],
        }
    }
}

type Rule = fn(&SpectrumModel, i32, &Context, &State) -> Vec<Fact>;

/// Module-level computations done once per classification.
struct Context {
    monogenic: Option<bool>,
    generators_concentrated: Option<bool>,
    cohomology_range: Option<(i32, i32)>,
    atomic_module: Option<bool>,
}

impl Context {
    fn prepare(model: &SpectrumModel, max_degree: i32) -> Context {
        match model.cohomology() {
            Some(m) => {
                let mg = m.minimal_generators();
                let bottom = m.bottom();
                let concentrated = bottom.is_some_and(|b| mg.concentrated_in(b)) && mg.total() >= 1;
                Context {
                    monogenic: Some(m.is_monogenic()),
                    generators_concentrated: Some(concentrated),
                    cohomology_range: Some((model.hurewicz_dim(), m.bound().min(max_degree))),
                    atomic_module: Some(m.is_atomic().is_atomic()),
                }
            }
            None => Context {
                monogenic: None,
                generators_concentrated: None,
                cohomology_range: None,
                atomic_module: None,
            },
        }
    }
}

type State = BTreeMap<Property, Verdict>;

/// Hurewicz-complex requirement: the definitions of atomic, minimal atomic,
/// undetectable homotopy and nuclear all presuppose a single bottom cell, so
/// a model whose bottom homology is not cyclic fails them outright.
fn rule_hurewicz_gate(m: &SpectrumModel, max: i32, _: &Context, _: &State) -> Vec<Fact> {
    if m.is_hurewicz() {
        return Vec::new();
    }
    let cite = "R0: bottom homology not cyclic, not a Hurewicz complex (Def. 1.1)";
    [
        Property::Atomic,
        Property::MinimalAtomic,
        Property::Irreducible,
        Property::NoModPDetectableHomotopy,
        Property::Nuclear,
    ]
    .into_iter()
    .map(|p| Fact::new(p, Value::No, Some((m.hurewicz_dim(), max)), cite.into()))
    .collect()
}

/// Cyclic cohomology over the Steenrod algebra settles everything.
fn rule_monogenic(_m: &SpectrumModel, _max: i32, ctx: &Context, _: &State) -> Vec<Fact> {
    let Some(monogenic) = ctx.monogenic else {
        return Vec::new();
    };
    let range = ctx.cohomology_range;
    if monogenic {
        vec![
            Fact::new(
                Property::Monogenic,
                Value::Yes,
                range,
                "R1: H* cyclic over the Steenrod algebra (Cor. 1.4)".into(),
            ),
            Fact::new(
                Property::NoModPDetectableHomotopy,
                Value::Yes,
                range,
                "R1: monogenic, zeroth Adams row concentrated in the bottom (Cor. 1.4)".into(),
            ),
        ]
    } else {
        vec![Fact::new(
            Property::Monogenic,
            Value::No,
            range,
            "R1: minimal generators not a single bottom class".into(),
        )]
    }
}

/// The zeroth Adams row: generators concentrated in the bottom degree
/// certify undetectable homotopy even without cyclicity. Generators above
/// the bottom prove nothing by themselves (permanence is not decided here),
/// so that direction stays unknown.
fn rule_ext_row(m: &SpectrumModel, _max: i32, ctx: &Context, _: &State) -> Vec<Fact> {
    let Some(conc) = ctx.generators_concentrated else {
        return Vec::new();
    };
    if conc && m.is_hurewicz() {
        vec![Fact::new(
            Property::NoModPDetectableHomotopy,
            Value::Yes,
            ctx.cohomology_range,
            "R2: zeroth Adams row vanishes above the bottom degree (Rem. 1.2(v))".into(),
        )]
    } else {
        Vec::new()
    }
}

/// Hurewicz-image bookkeeping: a single image nonzero mod p above the bottom
/// refutes minimal atomicity; zero-mod-p certificates covering every degree
/// with homology prove undetectable homotopy through the covered range.
fn rule_hurewicz_images(m: &SpectrumModel, max: i32, _: &Context, _: &State) -> Vec<Fact> {
    let p = m.prime().get();
    let n0 = m.hurewicz_dim();
    let mut facts = Vec::new();

    for (&n, entry) in m.hurewicz_images() {
        if n > n0 && entry.certifies_nonzero(p) {
            let cite = format!("R3: degree {n} Hurewicz image nonzero mod {p} (Rem. 6.9(ii))");
            facts.push(Fact::new(
                Property::NoModPDetectableHomotopy,
                Value::No,
                Some((n0, n)),
                cite.clone(),
            ));
            facts.push(Fact::new(
                Property::MinimalAtomic,
                Value::No,
                Some((n0, n)),
                cite,
            ));
            return facts;
        }
    }

    if m.hurewicz_images().is_empty() && m.homotopy_vanishes_above().is_none() {
        return facts;
    }
    // largest degree R with every degree in (n0, R] certified zero mod p
    let vanish = m.homotopy_vanishes_above();
    let known = m.homology().known_through();
    let mut certified_through = n0;
    for n in (n0 + 1)..=max {
        let vanishes = vanish.is_some_and(|d| n > d);
        let known_here = known.is_none_or(|k| n <= k);
        let certified = vanishes
            || (known_here
                && (m.homology().summands_at(n).is_empty()
                    || m.hurewicz_images()
                        .get(&n)
                        .is_some_and(|e| e.certifies_zero(p))));
        if certified {
            certified_through = n;
        } else {
            break;
        }
    }
    if certified_through > n0 && m.is_hurewicz() {
        facts.push(Fact::new(
            Property::NoModPDetectableHomotopy,
            Value::Yes,
            Some((n0, certified_through)),
            format!(
                "R3: mod-{p} Hurewicz images vanish above the bottom through degree {certified_through}"
            ),
        ));
    }
    facts
}

/// The characterization theorem: the three invariant conditions agree.
fn rule_equivalence(_: &SpectrumModel, _max: i32, _: &Context, state: &State) -> Vec<Fact> {
    let trio = [
        Property::NoModPDetectableHomotopy,
        Property::MinimalAtomic,
        Property::Irreducible,
    ];
    let mut facts = Vec::new();
    for &src in &trio {
        if let Some(v) = state.get(&src) {
            if v.value == Value::Unknown {
                continue;
            }
            for &dst in &trio {
                if dst != src {
                    // carry the originating citations, not earlier copies
                    let mut citations: Vec<String> = v
                        .provenance
                        .iter()
                        .filter(|c| !c.starts_with("R4:"))
                        .cloned()
                        .collect();
                    citations.push("R4: one of three equivalent conditions (Thm. 1.3)".into());
                    facts.push(Fact {
                        property: dst,
                        value: v.value,
                        range: v.range,
                        citations,
                    });
                }
            }
        }
    }
    facts
}

/// One-directional implications between the properties.
fn rule_implications(_: &SpectrumModel, _max: i32, _: &Context, state: &State) -> Vec<Fact> {
    let mut facts = Vec::new();
    let yes = |p: Property| state.get(&p).filter(|v| v.value == Value::Yes);
    if let Some(v) = yes(Property::MinimalAtomic) {
        facts.push(Fact::new(
            Property::Atomic,
            Value::Yes,
            v.range,
            "R5: minimal atomic complexes are atomic (Def. 1.1(iv))".into(),
        ));
    }
    if let Some(v) = yes(Property::Nuclear) {
        facts.push(Fact::new(
            Property::Atomic,
            Value::Yes,
            v.range,
            "R5: nuclear complexes are atomic (Prop. 1.8)".into(),
        ));
        facts.push(Fact::new(
            Property::MinimalAtomic,
            Value::Yes,
            v.range,
            "R5: nuclear complexes are minimal atomic (Thm. 1.10)".into(),
        ));
    }
    if let Some(v) = yes(Property::Atomic) {
        facts.push(Fact::new(
            Property::Indecomposable,
            Value::Yes,
            v.range,
            "R5: atomic implies wedge-indecomposable (Rem. 1.2(ii))".into(),
        ));
    }
    facts
}

/// Skeletal data decides nuclearity both ways for Hurewicz models, through
/// the attaching criterion and its Hurewicz-vanishing reformulation.
fn rule_skeletal(m: &SpectrumModel, _max: i32, _: &Context, _: &State) -> Vec<Fact> {
    let Some(data) = m.skeletal() else {
        return Vec::new();
    };
    if !m.is_hurewicz() {
        return Vec::new();
    }
    let mut facts = Vec::new();
    let range = data
        .attaching()
        .keys()
        .chain(data.hurewicz_maps().keys())
        .max()
        .map(|&hi| (m.hurewicz_dim(), hi));
    if !data.attaching().is_empty() {
        let ok = nuclear_test(data);
        facts.push(Fact::new(
            Property::Nuclear,
            if ok { Value::Yes } else { Value::No },
            range,
            format!(
                "R6: attaching kernels {} p times the wedge (Eq. 1.6)",
                if ok { "inside" } else { "escape" }
            ),
        ));
    }
    if !data.hurewicz_maps().is_empty() {
        let ok = hurewicz_zero_test(data);
        facts.push(Fact::new(
            Property::Nuclear,
            if ok { Value::Yes } else { Value::No },
            range,
            format!(
                "R6: skeletal mod-p Hurewicz maps {} above the bottom (Lemma 4.1)",
                if ok { "vanish" } else { "do not vanish" }
            ),
        ));
    }
    facts
}

/// An atomic cohomology module makes the spectrum atomic.
fn rule_atomic_module(m: &SpectrumModel, _max: i32, ctx: &Context, _: &State) -> Vec<Fact> {
    if ctx.atomic_module == Some(true) && m.is_hurewicz() {
        vec![Fact::new(
            Property::Atomic,
            Value::Yes,
            ctx.cohomology_range,
            "R7: H* is an atomic module over the Steenrod algebra (Rem. 6.9(ii))".into(),
        )]
    } else {
        Vec::new()
    }
}

/// The rule system. The order is irrelevant to the outcome (the rules are
/// monotone over a finite state lattice); `classify_with_order` exists so
/// tests can verify exactly that.
pub struct Ruleset {
    rules: Vec<(&'static str, Rule)>,
}

impl Default for Ruleset {
    fn default() -> Self {
        Ruleset {
            rules: vec![
                ("R0", rule_hurewicz_gate),
                ("R1", rule_monogenic),
                ("R2", rule_ext_row),
                ("R3", rule_hurewicz_images),
                ("R4", rule_equivalence),
                ("R5", rule_implications),
                ("R6", rule_skeletal),
                ("R7", rule_atomic_module),
            ],
        }
    }
}

impl Ruleset {
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

fn union(a: Option<(i32, i32)>, b: Option<(i32, i32)>) -> Option<(i32, i32)> {
    match (a, b) {
        (Some((al, ah)), Some((bl, bh))) => Some((al.min(bl), ah.max(bh))),
        (x, None) | (None, x) => x,
    }
}

fn absorb(state: &mut State, fact: Fact) -> Result<bool, ClassifyError> {
    let entry = state
        .entry(fact.property)
        .or_insert_with(|| Verdict::unknown(fact.property));
    match (entry.value, fact.value) {
        (_, Value::Unknown) => Ok(false),
        (Value::Unknown, v) => {
            entry.value = v;
            entry.range = fact.range;
            entry.provenance.extend(fact.citations);
            Ok(true)
        }
        (a, b) if a == b => {
            let mut changed = false;
            let merged = union(entry.range, fact.range);
            if merged != entry.range {
                entry.range = merged;
                changed = true;
            }
            for cite in fact.citations {
                if !entry.provenance.contains(&cite) {
                    entry.provenance.push(cite);
                    changed = true;
                }
            }
            Ok(changed)
        }
        (a, b) => Err(ClassifyError::Inconsistent {
            property: fact.property,
            first: (a, entry.provenance.clone()),
            second: (b, fact.citations),
        }),
    }
}

/// Runs the rules to a fixpoint in the given order (indices into the default
/// ruleset), returning all eight verdicts.
pub fn classify_with_order(
    model: &SpectrumModel,
    max_degree: i32,
    order: &[usize],
) -> Result<BTreeMap<Property, Verdict>, ClassifyError> {
    let ruleset = Ruleset::default();
    let ctx = Context::prepare(model, max_degree);
    let mut state: State = BTreeMap::new();
    loop {
        let mut changed = false;
        for &i in order {
            let (_, rule) = ruleset.rules[i];
            for fact in rule(model, max_degree, &ctx, &state) {
                changed |= absorb(&mut state, fact)?;
            }
        }
        if !changed {
            break;
        }
    }
    for p in Property::ALL {
        state.entry(p).or_insert_with(|| Verdict::unknown(p));
    }
    for v in state.values_mut() {
        v.provenance.sort();
        v.provenance.dedup();
    }
    Ok(state)
}

impl SpectrumModel {
    /// Applies the detection rules to a fixpoint and reports every property
    /// with provenance. Rule order does not affect the outcome.
    pub fn classify(&self, max_degree: i32) -> Result<BTreeMap<Property, Verdict>, ClassifyError> {
        let n = Ruleset::default().len();
        let order: Vec<usize> = (0..n).collect();
        classify_with_order(self, max_degree, &order)
    }
}
