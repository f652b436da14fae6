use serde::{Deserialize, Serialize};

use super::{FiniteSet, Mapping, Partition, Subset};
use crate::{Error, Result};

/// `f(X)` as a subset of the codomain.
pub fn image(f: &Mapping) -> Subset {
    Subset::from_elements(f.cod().size(), f.table().iter().copied())
        .expect("mapping tables lie in the codomain")
}

/// `X_f`: the blocks are exactly the nonempty fibres `f^-1({y})`.
pub fn kernel_partition(f: &Mapping) -> Partition {
    Partition::from_labels(f.table())
}

/// The deviation `(X_f, Y \ f(X))` of a mapping.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DeviationLiteral", into = "DeviationLiteral")]
pub struct Deviation {
    pub part: Partition,
    pub missed: Subset,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DeviationLiteral {
    dom: usize,
    cod: usize,
    partition: Partition,
    missed: Vec<usize>,
}

impl From<Deviation> for DeviationLiteral {
    fn from(d: Deviation) -> Self {
        DeviationLiteral {
            dom: d.part.base(),
            cod: d.missed.base(),
            partition: d.part,
            missed: d.missed.elements(),
        }
    }
}

impl TryFrom<DeviationLiteral> for Deviation {
    type Error = Error;

    fn try_from(lit: DeviationLiteral) -> Result<Self> {
        if lit.partition.base() != lit.dom {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} elements, domain has {}",
                lit.partition.base(),
                lit.dom
            )));
        }
        Ok(Deviation {
            part: lit.partition,
            missed: Subset::from_elements(lit.cod, lit.missed)?,
        })
    }
}

pub fn deviation(f: &Mapping) -> Deviation {
    Deviation {
        part: kernel_partition(f),
        missed: image(f).complement(),
    }
}

/// `dev(f) <= dev(g)`: `X_f` refines `X_g` and `Y \ f(X) ⊆ Y \ g(X)`.
/// Only defined for mappings with the same domain and codomain.
pub fn deviation_leq(f: &Mapping, g: &Mapping) -> Result<bool> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::SignatureMismatch(format!(
            "deviation order compares {} -> {} with {} -> {}",
            f.dom().size(),
            f.cod().size(),
            g.dom().size(),
            g.cod().size()
        )));
    }
    let (df, dg) = (deviation(f), deviation(g));
    Ok(df.part.leq(&dg.part)? && df.missed.is_subset_of(&dg.missed))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    pub constant: bool,
}

impl Classification {
    /// The same flags from the elementwise definitions, bypassing the deviation.
    pub fn direct(f: &Mapping) -> Self {
        Classification {
            injective: f.is_injective(),
            surjective: f.is_surjective(),
            bijective: f.is_bijective(),
            constant: f.is_constant(),
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (flag, name) in [
            (self.injective, "injective"),
            (self.surjective, "surjective"),
            (self.bijective, "bijective"),
            (self.constant, "constant"),
        ] {
            if flag {
                out.push(name);
            }
        }
        out
    }
}

/// Reads the classification off the deviation alone:
/// bijective iff `dev(f) = (X, ∅)`, surjective iff the missed part is empty,
/// injective iff `X_f` is discrete, constant iff `X_f = {X}`.
pub fn classify(f: &Mapping) -> Classification {
    let dev = deviation(f);
    let n = f.dom().size();
    let discrete = dev.part == Partition::discrete(n);
    Classification {
        injective: discrete,
        surjective: dev.missed.is_empty(),
        bijective: discrete && dev.missed.is_empty(),
        constant: dev.part == Partition::indiscrete(n),
    }
}

/// `X -> X_f -> f(X) -> Y`, a surjection, a bijection and an injection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// `x` to the index of its block in the kernel partition.
    pub proj: Mapping,
    /// Block `f^-1({y})` to the position of `y` in the ascending listing of `f(X)`.
    pub mid: Mapping,
    /// Position in `f(X)` back to the element of `Y`.
    pub incl: Mapping,
}

impl Factorization {
    pub fn compose(&self) -> Mapping {
        self.proj
            .then(&self.mid)
            .and_then(|m| m.then(&self.incl))
            .expect("factorization components are composable")
    }
}

pub fn canonical_factorization(f: &Mapping) -> Factorization {
    let part = kernel_partition(f);
    let img = image(f).elements();
    let block_set = FiniteSet::with_labels(
        part.blocks()
            .iter()
            .map(|b| serde_json::to_string(b).expect("serializable"))
            .collect(),
    )
    .expect("blocks are distinct");
    let image_set =
        FiniteSet::with_labels(img.iter().map(|&y| f.cod().label(y)).collect()).expect("distinct");
    let position = |y: usize| img.binary_search(&y).expect("y lies in the image");

    let proj = Mapping::new(
        f.dom().clone(),
        block_set.clone(),
        f.dom().elements().map(|x| part.block_of(x)).collect(),
    )
    .expect("block indices in range");
    let mid = Mapping::new(
        block_set,
        image_set.clone(),
        part.blocks()
            .iter()
            .map(|b| position(f.apply(b[0])))
            .collect(),
    )
    .expect("image positions in range");
    let incl = Mapping::new(image_set, f.cod().clone(), img.clone()).expect("image lies in Y");
    Factorization { proj, mid, incl }
}

/// The bijection `X_f -> f(X)` induced by `f`.
pub fn rho(f: &Mapping) -> Mapping {
    canonical_factorization(f).mid
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(cod: usize, table: &[usize]) -> Mapping {
        Mapping::from_table(cod, table.to_vec()).unwrap()
    }

    fn blocks(p: &Partition) -> Vec<Vec<usize>> {
        p.blocks().to_vec()
    }

    #[test]
    fn image_examples() {
        assert_eq!(
            image(&Mapping::identity(&FiniteSet::new(3))).elements(),
            vec![0, 1, 2]
        );
        assert_eq!(image(&map(2, &[0, 0, 0])).elements(), vec![0]);
        assert_eq!(image(&map(3, &[0, 0, 2])).elements(), vec![0, 2]);
    }

    #[test]
    fn kernel_partition_examples() {
        let id = Mapping::identity(&FiniteSet::new(3));
        assert_eq!(
            blocks(&kernel_partition(&id)),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            blocks(&kernel_partition(&map(1, &[0, 0, 0]))),
            vec![vec![0, 1, 2]]
        );
        assert_eq!(
            blocks(&kernel_partition(&map(3, &[0, 0, 2]))),
            vec![vec![0, 1], vec![2]]
        );
        assert_eq!(kernel_partition(&map(3, &[])).num_blocks(), 0);
    }

    #[test]
    fn factorization_of_constant_map() {
        let fac = canonical_factorization(&map(2, &[0, 0]));
        assert_eq!((fac.proj.dom().size(), fac.proj.cod().size()), (2, 1));
        assert_eq!((fac.mid.dom().size(), fac.mid.cod().size()), (1, 1));
        assert_eq!((fac.incl.dom().size(), fac.incl.cod().size()), (1, 2));
        assert_eq!(fac.compose(), map(2, &[0, 0]));
    }

    #[test]
    fn factorization_of_non_injective_non_surjective_map() {
        let f = map(3, &[0, 0, 2]);
        let fac = canonical_factorization(&f);
        assert_eq!(fac.proj.table(), &[0, 0, 1]);
        assert!(fac.proj.is_surjective());
        assert_eq!(fac.mid.table(), &[0, 1]);
        assert!(fac.mid.is_bijective());
        assert_eq!(fac.incl.table(), &[0, 2]);
        assert!(fac.incl.is_injective());
        assert_eq!(fac.compose(), f);
        assert_eq!(fac.mid.dom().label(0), "[0,1]");
    }

    #[test]
    fn bijective_factorization() {
        let f = map(3, &[2, 0, 1]);
        let fac = canonical_factorization(&f);
        assert!(fac.proj.is_bijective() && fac.incl.is_bijective());
        assert_eq!(fac.mid.table(), &[2, 0, 1]);
    }

    #[test]
    fn deviation_examples() {
        let d = deviation(&map(3, &[1, 2, 0]));
        assert!(d.part.is_discrete() && d.missed.is_empty());
        let d = deviation(&map(2, &[0, 0, 0]));
        assert_eq!(blocks(&d.part), vec![vec![0, 1, 2]]);
        assert_eq!(d.missed.elements(), vec![1]);
        let d = deviation(&map(3, &[0, 2]));
        assert!(d.part.is_discrete());
        assert_eq!(d.missed.elements(), vec![1]);
    }

    #[test]
    fn deviation_serde_round_trip() {
        let d = deviation(&map(3, &[0, 0, 2]));
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(
            text,
            r#"{"dom":3,"cod":3,"partition":[[0,1],[2]],"missed":[1]}"#
        );
        assert_eq!(serde_json::from_str::<Deviation>(&text).unwrap(), d);
    }

    #[test]
    fn classify_examples() {
        let id = classify(&Mapping::identity(&FiniteSet::new(3)));
        assert_eq!(id.names(), vec!["injective", "surjective", "bijective"]);
        assert_eq!(classify(&map(2, &[0, 0, 1])).names(), vec!["surjective"]);
        assert_eq!(classify(&map(2, &[1, 1])).names(), vec!["constant"]);
    }

    #[test]
    fn deviation_order_examples() {
        let bij = map(3, &[1, 0, 2]);
        let f = map(3, &[0, 0, 1]);
        assert!(deviation_leq(&bij, &f).unwrap());
        assert!(deviation_leq(&f, &f).unwrap());
        let c = map(2, &[0, 0, 0]);
        let g = map(2, &[0, 1, 0]);
        assert!(!deviation_leq(&c, &g).unwrap());
        assert!(deviation_leq(&c, &map(3, &[0, 0, 0])).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&map(2, &[0, 0, 0])).table(), &[0]);
        let r = rho(&map(3, &[0, 0, 2]));
        assert_eq!(r.dom().size(), 2);
        assert!(r.is_bijective());
    }
}
