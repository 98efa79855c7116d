//! Benchmark fixtures. The benches themselves live in `benches/`.

use blocksys_core::coalgebra::{dual_group_algebra, taft, FiniteGroup, HopfData};
use blocksys_core::exactlin::{Cyclotomic, Rational};

pub fn taft3() -> HopfData<Cyclotomic<3>> {
    taft(3, &Cyclotomic::<3>::zeta()).expect("taft(3) is supported")
}

pub fn dual_s3() -> HopfData<Rational> {
    dual_group_algebra(&FiniteGroup::symmetric3())
}
