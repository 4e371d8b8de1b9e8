//! The shipped fixture library, embedded so the `fixtures` subcommand and
//! path-less lookups work from any directory. The same files live under
//! `fixtures/` in the source tree.

/// (name, kind, contents)
pub const FIXTURES: &[(&str, FixtureKind, &str)] = &[
    (
        "sphere",
        FixtureKind::Model,
        include_str!("../fixtures/sphere.toml"),
    ),
    (
        "moore-z8-3",
        FixtureKind::Model,
        include_str!("../fixtures/moore-z8-3.toml"),
    ),
    (
        "k-z8-2",
        FixtureKind::Model,
        include_str!("../fixtures/k-z8-2.toml"),
    ),
    (
        "ko",
        FixtureKind::Model,
        include_str!("../fixtures/ko.toml"),
    ),
    (
        "eo2",
        FixtureKind::Model,
        include_str!("../fixtures/eo2.toml"),
    ),
    (
        "bp",
        FixtureKind::Model,
        include_str!("../fixtures/bp.toml"),
    ),
    (
        "bp0",
        FixtureKind::Model,
        include_str!("../fixtures/bp0.toml"),
    ),
    (
        "bp1",
        FixtureKind::Model,
        include_str!("../fixtures/bp1.toml"),
    ),
    (
        "bp2",
        FixtureKind::Model,
        include_str!("../fixtures/bp2.toml"),
    ),
    (
        "bp1-p3",
        FixtureKind::Model,
        include_str!("../fixtures/bp1-p3.toml"),
    ),
    (
        "thom-rp",
        FixtureKind::Model,
        include_str!("../fixtures/thom-rp.toml"),
    ),
    (
        "thom-cp",
        FixtureKind::Model,
        include_str!("../fixtures/thom-cp.toml"),
    ),
    (
        "thom-hp",
        FixtureKind::Model,
        include_str!("../fixtures/thom-hp.toml"),
    ),
    (
        "susp-cp",
        FixtureKind::Model,
        include_str!("../fixtures/susp-cp.toml"),
    ),
    (
        "susp-hp",
        FixtureKind::Model,
        include_str!("../fixtures/susp-hp.toml"),
    ),
    (
        "susp-mxi3",
        FixtureKind::Model,
        include_str!("../fixtures/susp-mxi3.toml"),
    ),
    (
        "susp-rp",
        FixtureKind::Model,
        include_str!("../fixtures/susp-rp.toml"),
    ),
    (
        "w1-p3",
        FixtureKind::Model,
        include_str!("../fixtures/w1-p3.toml"),
    ),
    (
        "koA1",
        FixtureKind::Module,
        include_str!("../fixtures/koA1.toml"),
    ),
    (
        "moore.chain",
        FixtureKind::Chain,
        include_str!("../fixtures/moore.chain.json"),
    ),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    /// A spectrum model (`classify`).
    Model,
    /// A module presentation (`ext0`).
    Module,
    /// A chain complex (`minimalize`).
    Chain,
}

impl FixtureKind {
    pub fn describe(self) -> &'static str {
        match self {
            FixtureKind::Model => "spectrum model",
            FixtureKind::Module => "module presentation",
            FixtureKind::Chain => "chain complex",
        }
    }
}

pub fn find(name: &str) -> Option<(&'static str, FixtureKind, &'static str)> {
    FIXTURES.iter().copied().find(|(n, _, _)| *n == name)
}
