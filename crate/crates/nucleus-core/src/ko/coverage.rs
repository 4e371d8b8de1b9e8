use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::bracket::{family_brackets, BracketFailure};
use super::element::{ko_group, KoGroupKind};
use super::stems::StableStemTable;

/// Outcome of checking that the four generator families cover every nonzero
/// positive degree of the ring.
#[derive(Clone, Debug)]
pub struct CoverageReport {
    pub max_degree: u32,
    /// degree -> the family member responsible, with its target generator.
    pub covered: BTreeMap<u32, String>,
    /// nonzero degrees left uncovered (a correct table has none).
    pub gaps: Vec<u32>,
    /// the bracket families exist, are defined, and their indeterminacies
    /// all lie in twice the group.
    pub brackets_defined: bool,
    pub indeterminacies_mod_two: bool,
}

impl CoverageReport {
    pub fn complete(&self) -> bool {
        self.gaps.is_empty() && self.brackets_defined && self.indeterminacies_mod_two
    }
}

/// Verifies the §-by-§ bookkeeping behind surjectivity onto the ring: the
/// families `mu_{8k+1} . 1 -> eta beta^k`, `mu_{8k+2} . 1 -> eta^2 beta^k`,
/// `a_{k+1} -> alpha beta^k`, `b_{k+1} -> beta^{k+1}` have degrees `8k+1`,
/// `8k+2`, `8k+4`, `8k+8`, which together hit every positive degree with a
/// nonzero group; the bracket degrees are recomputed from `|a|+|b|+|c|+1`.
pub fn generator_coverage_check(max_degree: u32) -> Result<CoverageReport, BracketFailure> {
    let mut covered: BTreeMap<u32, String> = BTreeMap::new();

    // eta families from the mu symbols
    for k in 0.. {
        let d1 = 8 * k + 1;
        let d2 = 8 * k + 2;
        if d1 <= max_degree {
            let image = StableStemTable::mu_8k1_image(k);
            debug_assert_eq!(image.degree(), d1);
            covered.insert(d1, format!("mu_{d1} . e -> {image}"));
        }
        if d2 <= max_degree {
            let image = StableStemTable::mu_8k2_image(k);
            covered.insert(d2, format!("mu_{d2} . e -> {image}"));
        }
        if d1 > max_degree && d2 > max_degree {
            break;
        }
    }

    // bracket families; degrees recomputed from the bracket formula
    let max_k = max_degree / 8 + 1;
    let families = family_brackets(max_k)?;
    let mut brackets_defined = true;
    let mut indeterminacies_mod_two = true;
    for b in &families {
        // |a| + |b| + |c| + 1 with |a| = 0
        let expect = match b.label.as_str() {
            "a_1" => 4,
            label => {
                let (fam, k): (&str, u32) = label
                    .split_once('_')
                    .map(|(f, k)| (f, k.parse().unwrap()))
                    .unwrap();
                match fam {
                    "a" => 8 * (k - 1) + 4,
                    _ => 8 * k,
                }
            }
        };
        if b.degree != expect {
            brackets_defined = false;
        }
        if !b.indeterminacy.contained_in_two_pi {
            indeterminacies_mod_two = false;
        }
        if b.degree <= max_degree {
            let target = ko_group(b.degree).generator.unwrap_or_else(|| "0".into());
            covered.insert(
                b.degree,
                format!("{} = <{}, {}, {}> -> {target}", b.label, b.a, b.b, b.c),
            );
        }
    }

    let gaps: Vec<u32> = (1..=max_degree)
        .filter(|&n| ko_group(n).kind != KoGroupKind::Zero && !covered.contains_key(&n))
        .collect();
    // drop coverage entries for degrees with zero group (nothing to cover)
    covered.retain(|&n, _| ko_group(n).kind != KoGroupKind::Zero);

    Ok(CoverageReport {
        max_degree,
        covered,
        gaps,
        brackets_defined,
        indeterminacies_mod_two,
    })
}
