use crate::imaging::StrokeWidthMap;
use crate::skeleton_graph::{graph_from_skeleton, SkeletonGraph};
use crate::synth::{skeleton_fixture, SkeletonFixture};

pub(crate) fn graph(f: SkeletonFixture) -> SkeletonGraph {
    let skel = skeleton_fixture(f);
    let swt = StrokeWidthMap::constant(&skel, 1);
    graph_from_skeleton(&skel, &swt).unwrap()
}

pub(crate) fn plus() -> SkeletonGraph {
    graph(SkeletonFixture::Plus)
}
