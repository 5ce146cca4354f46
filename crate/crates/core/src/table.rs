//! Reference data for the exceptional roots with `N >= 7` and the check that
//! recomputes it.

use rayon::prelude::*;
use serde::Serialize;

use crate::burau::Ambient;
use crate::exactalg::{factor_over_prime, neg_cyclotomic, FpPoly};
use crate::skeleton::{
    enumerate_universal, euler_lhs, verify_region_widths, verify_special_fragments, Signature,
    Skeleton, SkeletonError, UniversalGroupSpec,
};
use crate::typesys::{RootSpec, TypeTag};

/// One line of the table. Factors within a group have isomorphic
/// skeletons; all factors of a line share its signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub p: u64,
    pub n: u64,
    pub groups: &'static [&'static [&'static str]],
    pub starred: bool,
    pub signature: &'static str,
}

impl GoldenRow {
    pub fn factors(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.groups.iter().flat_map(|g| g.iter().copied())
    }

    pub fn signature(&self) -> Signature {
        self.signature.parse().expect("embedded signature")
    }

    pub fn label(&self) -> String {
        format!("p={} N={}", self.p, self.n)
    }

    pub fn root(&self, factor: &str) -> RootSpec {
        RootSpec::parse(self.p, factor).expect("embedded factor is irreducible")
    }

    /// The row's first factor, used where one root per line is needed.
    pub fn lead_root(&self) -> RootSpec {
        self.root(self.groups[0][0])
    }
}

pub const GOLDEN: [GoldenRow; 13] = [
    GoldenRow {
        p: 2,
        n: 7,
        groups: &[&["t^3+t+1", "t^3+t^2+1"]],
        starred: true,
        signature: "(9;1,0;1^2 7^1)",
    },
    GoldenRow {
        p: 2,
        n: 15,
        groups: &[&["t^4+t+1", "t^4+t^3+1"]],
        starred: true,
        signature: "(17;1,2;1^2 15^1)",
    },
    GoldenRow {
        p: 3,
        n: 8,
        groups: &[&["t^2+2t+2", "t^2+t+2"]],
        starred: true,
        signature: "(10;0,1;1^2 8^1)",
    },
    GoldenRow {
        p: 5,
        n: 8,
        groups: &[&["t^2+2", "t^2+3"]],
        starred: true,
        signature: "(78;0,0;1^6 8^9)",
    },
    GoldenRow {
        p: 5,
        n: 12,
        groups: &[&["t^2+2t+4", "t^2+3t+4"]],
        starred: false,
        signature: "(52;0,4;1^4 12^4)",
    },
    GoldenRow {
        p: 11,
        n: 10,
        groups: &[&["t+2"], &["t+6"], &["t+7"], &["t+8"]],
        starred: true,
        signature: "(24;2,0;1^2 2^1 10^2)",
    },
    GoldenRow {
        p: 13,
        n: 12,
        groups: &[&["t+2", "t+7"], &["t+6", "t+11"]],
        starred: true,
        signature: "(14;0,2;1^2 12^1)",
    },
    GoldenRow {
        p: 17,
        n: 8,
        groups: &[&["t+2", "t+9"], &["t+8", "t+15"]],
        starred: true,
        signature: "(36;0,0;1^4 8^4)",
    },
    GoldenRow {
        p: 19,
        n: 9,
        groups: &[&["t+4", "t+5"], &["t+6", "t+16"], &["t+9", "t+17"]],
        starred: false,
        signature: "(20;0,2;1^2 9^2)",
    },
    GoldenRow {
        p: 19,
        n: 18,
        groups: &[
            &["t+2"],
            &["t+3"],
            &["t+10"],
            &["t+13"],
            &["t+14"],
            &["t+15"],
        ],
        starred: false,
        signature: "(40;2,4;1^2 2^1 18^2)",
    },
    GoldenRow {
        p: 29,
        n: 7,
        groups: &[&["t+7", "t+25"], &["t+16", "t+20"], &["t+23", "t+24"]],
        starred: true,
        signature: "(60;0,0;1^4 7^8)",
    },
    GoldenRow {
        p: 37,
        n: 9,
        groups: &[&["t+7", "t+16"], &["t+9", "t+33"], &["t+12", "t+34"]],
        starred: false,
        signature: "(76;0,4;1^4 9^8)",
    },
    GoldenRow {
        p: 43,
        n: 7,
        groups: &[&["t+4", "t+11"], &["t+16", "t+35"], &["t+21", "t+41"]],
        starred: true,
        signature: "(132;0,0;1^6 7^18)",
    },
];

/// Internal consistency of the embedded rows: widths sum to the edge count
/// and the Euler identity gives 12.
pub fn golden_self_check() -> Result<(), String> {
    for row in &GOLDEN {
        let sig = row.signature();
        if sig.width_sum() != sig.edges {
            return Err(format!(
                "{}: widths do not sum to {}",
                row.label(),
                sig.edges
            ));
        }
        if euler_lhs(&sig) != 12 {
            return Err(format!("{}: Euler identity fails", row.label()));
        }
    }
    Ok(())
}

pub fn universal_skeleton(
    root: &RootSpec,
    ambient: Ambient,
    cap: usize,
) -> Result<Skeleton, SkeletonError> {
    let spec = UniversalGroupSpec {
        root: root.clone(),
        tag: TypeTag::I,
        ambient,
    };
    enumerate_universal(&spec, cap)
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub factor: String,
    pub n: u64,
    pub bu3: String,
    pub b3: String,
    #[serde(rename = "b3Genus")]
    pub b3_genus: u64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub row: String,
    pub expected: String,
    pub starred: bool,
    /// Whether the full factorization of `phi_N(-t)` mod `p` is exactly the
    /// row's factor list.
    #[serde(rename = "factorsMatch")]
    pub factors_match: bool,
    /// `bu3` or `both`, depending on which ambients reproduce the signature.
    #[serde(rename = "matchedAmbient")]
    pub matched_ambient: String,
    pub factors: Vec<FactorReport>,
    pub pass: bool,
}

fn factor_set(row: &GoldenRow) -> (Vec<String>, Vec<String>) {
    let phi = neg_cyclotomic(row.n).expect("n >= 1");
    let mut computed: Vec<String> = factor_over_prime(&phi, row.p)
        .expect("phi does not vanish mod p")
        .into_iter()
        .map(|(f, _)| f.to_string())
        .collect();
    let mut listed: Vec<String> = row
        .factors()
        .map(|f| {
            FpPoly::parse(f, row.p)
                .expect("embedded factor")
                .to_string()
        })
        .collect();
    computed.sort();
    listed.sort();
    (computed, listed)
}

/// Recomputes one row: factor list, both ambient skeletons of every
/// factor, signature, genus, width and special-fragment checks, and the star.
pub fn verify_row(row: &GoldenRow, cap: usize) -> Result<RowReport, SkeletonError> {
    let expected = row.signature();
    let (computed, listed) = factor_set(row);
    let mut factors = Vec::new();
    let mut b3_matches = true;
    for f in row.factors() {
        let root = row.root(f);
        let bu3 = universal_skeleton(&root, Ambient::Bu3, cap)?;
        let b3 = universal_skeleton(&root, Ambient::B3, cap)?;
        let sig = bu3.signature();
        let b3_genus = b3.genus();
        b3_matches &= b3.signature() == expected;
        let ok = root.n() == row.n
            && sig == expected
            && bu3.genus() == 0
            && verify_region_widths(&bu3, row.n)
            && verify_region_widths(&b3, row.n)
            && verify_special_fragments(&bu3, row.n)
            && (b3_genus == 0) == row.starred;
        factors.push(FactorReport {
            factor: f.to_string(),
            n: root.n(),
            bu3: sig.to_string(),
            b3: b3.signature().to_string(),
            b3_genus,
            ok,
        });
    }
    let factors_match = computed == listed;
    let pass = factors_match && factors.iter().all(|f| f.ok);
    Ok(RowReport {
        row: row.label(),
        expected: row.signature.to_string(),
        starred: row.starred,
        factors_match,
        matched_ambient: if b3_matches { "both" } else { "bu3" }.to_string(),
        factors,
        pass,
    })
}

pub fn table_verify(cap: usize) -> Result<Vec<RowReport>, SkeletonError> {
    GOLDEN.par_iter().map(|row| verify_row(row, cap)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_rows_are_consistent() {
        golden_self_check().unwrap();
        assert_eq!(GOLDEN.iter().filter(|r| r.starred).count(), 9);
    }

    #[test]
    fn small_rows_verify() {
        for row in GOLDEN.iter().filter(|r| r.p <= 3) {
            let report = verify_row(row, 10_000).unwrap();
            assert!(report.pass, "{report:?}");
        }
    }
}
