//! Oriented link diagrams: crossings, segments, components, and traced regions.
//!
//! A diagram is a 4-valent graph with oriented edges (segments) and signed
//! vertices (crossings). Each crossing has four slots named after the local
//! picture read left to right: `in1` enters at the north-west, `in2` at the
//! south-west, `out2` (the continuation of strand 2) leaves at the north-east
//! and `out1` at the south-east. At a positive crossing strand 1 passes over
//! strand 2; at a negative crossing it passes under. The four corner regions
//! are N (between in1/out2), W (in1/in2), S (in2/out1), E (out1/out2).

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_i8(s: i8) -> Result<Sign> {
        match s {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            _ => Err(Error::InvalidDiagram(format!("crossing sign {s} is not ±1"))),
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// Where a segment attaches to a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    In1,
    In2,
    Out1,
    Out2,
}

/// Corner positions around a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Corner {
    N,
    W,
    S,
    E,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: Sign,
    pub in1: usize,
    pub in2: usize,
    pub out1: usize,
    pub out2: usize,
    /// Region ids at the four corners, filled in by face tracing.
    #[serde(skip_deserializing)]
    pub region_n: usize,
    #[serde(skip_deserializing)]
    pub region_w: usize,
    #[serde(skip_deserializing)]
    pub region_s: usize,
    #[serde(skip_deserializing)]
    pub region_e: usize,
}

impl Crossing {
    pub fn new(sign: Sign, in1: usize, in2: usize, out1: usize, out2: usize) -> Self {
        Crossing {
            sign,
            in1,
            in2,
            out1,
            out2,
            region_n: usize::MAX,
            region_w: usize::MAX,
            region_s: usize::MAX,
            region_e: usize::MAX,
        }
    }

    pub fn region(&self, corner: Corner) -> usize {
        match corner {
            Corner::N => self.region_n,
            Corner::W => self.region_w,
            Corner::S => self.region_s,
            Corner::E => self.region_e,
        }
    }
}

/// A face of the diagram on S².
#[derive(Debug, Clone, Serialize)]
pub struct Region {
    /// Corners traced around the face as (crossing, corner) pairs.
    pub corners: Vec<(usize, Corner)>,
    /// Sorted, deduplicated ids of segments on the boundary.
    pub segments: Vec<usize>,
    pub unbounded: bool,
}

/// Endpoint data for a segment: the crossing it leaves (tail) and the one it
/// enters (head), together with the slot it occupies there.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SegmentEnds {
    pub tail_crossing: usize,
    pub tail_slot_is_out1: bool,
    pub head_crossing: usize,
    pub head_slot_is_in1: bool,
}

#[derive(Debug, Clone)]
pub struct LinkDiagram {
    pub crossings: Vec<Crossing>,
    pub n_segments: usize,
    /// Segment cycles, one per link component, each starting at its lowest id.
    pub components: Vec<Vec<usize>>,
    pub regions: Vec<Region>,
    /// Per-segment endpoint data; empty for crossing-less diagrams.
    pub ends: Vec<SegmentEnds>,
    /// Region to the left / right of each segment (w.r.t. its orientation).
    pub left_region: Vec<usize>,
    pub right_region: Vec<usize>,
    pub unbounded_region: usize,
}

/// JSON input schema for diagrams.
#[derive(Debug, Deserialize)]
struct DiagramInput {
    crossings: Vec<CrossingInput>,
    #[allow(dead_code)]
    orientations: Option<Vec<i8>>,
    unbounded_region: Option<usize>,
}

#[derive(Debug, Deserialize)]
struct CrossingInput {
    sign: i8,
    in1: usize,
    in2: usize,
    out1: usize,
    out2: usize,
}

impl LinkDiagram {
    /// Parse a diagram from JSON (the crossing-list schema) or a braid word.
    pub fn parse(text: &str) -> Result<LinkDiagram> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::InvalidDiagram("empty input".into()));
        }
        if t.starts_with('{') || t.starts_with('[') {
            let input: DiagramInput = serde_json::from_str(t)
                .map_err(|e| Error::InvalidDiagram(format!("bad JSON: {e}")))?;
            let crossings = input
                .crossings
                .into_iter()
                .map(|c| Ok(Crossing::new(Sign::from_i8(c.sign)?, c.in1, c.in2, c.out1, c.out2)))
                .collect::<Result<Vec<_>>>()?;
            LinkDiagram::from_crossings(crossings, input.unbounded_region)
        } else {
            let (word, strands) = parse_braid_word(t)?;
            LinkDiagram::from_braid(&word, strands, true)
        }
    }

    /// The 0-crossing unknot: one segment bounding two regions.
    pub fn unknot() -> LinkDiagram {
        LinkDiagram {
            crossings: Vec::new(),
            n_segments: 1,
            components: vec![vec![0]],
            regions: vec![
                Region {
                    corners: vec![],
                    segments: vec![0],
                    unbounded: true,
                },
                Region {
                    corners: vec![],
                    segments: vec![0],
                    unbounded: false,
                },
            ],
            ends: Vec::new(),
            left_region: vec![0],
            right_region: vec![1],
            unbounded_region: 0,
        }
    }

    /// Closure of the braid word σ₁³: the standard trefoil diagram. Segments
    /// follow the twist region: odd ids are the lower strand, even the upper.
    pub fn trefoil() -> LinkDiagram {
        LinkDiagram::from_braid(&[(1, Sign::Positive); 3], 2, true).expect("valid")
    }

    /// The standard figure-eight diagram with the conventional segment
    /// labeling: segment k+1 follows segment k along the knot, crossings
    /// alternate and the two positive crossings join segments (8,5)→(1,6)
    /// and (4,1)→(5,2).
    pub fn figure_eight() -> LinkDiagram {
        let crossings = vec![
            Crossing::new(Sign::Positive, 7, 4, 0, 5),
            Crossing::new(Sign::Positive, 3, 0, 4, 1),
            Crossing::new(Sign::Negative, 2, 5, 3, 6),
            Crossing::new(Sign::Negative, 6, 1, 7, 2),
        ];
        LinkDiagram::from_crossings(crossings, None).expect("valid")
    }

    /// Build a diagram from explicit crossing data and trace its regions.
    pub fn from_crossings(
        crossings: Vec<Crossing>,
        unbounded_hint: Option<usize>,
    ) -> Result<LinkDiagram> {
        if crossings.is_empty() {
            return Ok(LinkDiagram::unknot());
        }
        let n_segments = validate_slots(&crossings)?;
        let ends = segment_ends(&crossings, n_segments);
        let components = trace_components(&crossings, n_segments, &ends);
        let mut diagram = LinkDiagram {
            crossings,
            n_segments,
            components,
            regions: Vec::new(),
            ends,
            left_region: Vec::new(),
            right_region: Vec::new(),
            unbounded_region: 0,
        };
        diagram.trace_regions_internal()?;
        if let Some(u) = unbounded_hint {
            if u >= diagram.regions.len() {
                return Err(Error::InvalidDiagram(format!(
                    "unbounded_region {u} out of range (diagram has {} regions)",
                    diagram.regions.len()
                )));
            }
            for (i, r) in diagram.regions.iter_mut().enumerate() {
                r.unbounded = i == u;
            }
            diagram.unbounded_region = u;
        }
        Ok(diagram)
    }

    /// Build the trace closure of a braid word on `strands` strands.
    ///
    /// Generator i braids the strand in position i over the strand in
    /// position i+1 when positive. Only the trace closure yields an oriented
    /// diagram compatible with the crossing slot structure; `close = false`
    /// (plat closure) is rejected because plat caps join strands head to
    /// head, which has no oriented PD representation here.
    pub fn from_braid(word: &[(usize, Sign)], strands: usize, close: bool) -> Result<LinkDiagram> {
        if !close {
            return Err(Error::InvalidDiagram(
                "only the trace closure of a braid is supported".into(),
            ));
        }
        if strands == 0 {
            return Err(Error::InvalidDiagram("braid needs at least one strand".into()));
        }
        for &(i, _) in word {
            if i == 0 || i >= strands {
                return Err(Error::InvalidDiagram(format!(
                    "generator index {i} out of range for {strands} strands"
                )));
            }
        }
        if word.is_empty() {
            if strands == 1 {
                return Ok(LinkDiagram::unknot());
            }
            return Err(Error::InvalidDiagram(
                "closure of the empty braid on >1 strands is a crossing-less unlink; \
                 only the 1-strand unknot is supported without crossings"
                    .into(),
            ));
        }
        // Sweep the word, allocating a fresh segment id per crossing output.
        let mut pos: Vec<usize> = (0..strands).collect();
        let initial = pos.clone();
        let mut next_id = strands;
        let mut raw = Vec::with_capacity(word.len());
        for &(i, sign) in word {
            let in1 = pos[i - 1];
            let in2 = pos[i];
            let out2 = next_id; // strand 2 continues in position i-1
            let out1 = next_id + 1; // strand 1 continues in position i
            next_id += 2;
            pos[i - 1] = out2;
            pos[i] = out1;
            raw.push(Crossing::new(sign, in1, in2, out1, out2));
        }
        // Trace closure: the final segment in each position is the initial one.
        let mut canon: Vec<usize> = (0..next_id).collect();
        for (k, &last) in pos.iter().enumerate() {
            if last == initial[k] {
                // A strand untouched by the word closes into a crossing-less
                // loop; such components have no segments at crossings.
                return Err(Error::InvalidDiagram(format!(
                    "strand {} is not used by the braid word; its closure is a split unknot",
                    k + 1
                )));
            }
            canon[last] = initial[k];
        }
        // Renumber the surviving ids in increasing order.
        let mut used: Vec<usize> = (0..next_id).filter(|&s| canon[s] == s).collect();
        used.sort_unstable();
        let mut rename = vec![usize::MAX; next_id];
        for (new, &old) in used.iter().enumerate() {
            rename[old] = new;
        }
        let crossings = raw
            .into_iter()
            .map(|c| {
                Crossing::new(
                    c.sign,
                    rename[canon[c.in1]],
                    rename[canon[c.in2]],
                    rename[canon[c.out1]],
                    rename[canon[c.out2]],
                )
            })
            .collect();
        LinkDiagram::from_crossings(crossings, None)
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// Component index of a segment.
    pub fn component_of(&self, segment: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.contains(&segment))
            .expect("segment in some component")
    }

    /// Writhe of one component: the sum of signs over its self-crossings.
    pub fn writhe(&self, component: usize) -> i64 {
        let comp = &self.components[component];
        self.crossings
            .iter()
            .filter(|c| comp.contains(&c.in1) && comp.contains(&c.in2))
            .map(|c| c.sign.as_i8() as i64)
            .sum()
    }

    /// Whether the strand through `slot` passes over the other strand.
    pub fn slot_is_over(sign: Sign, slot: Slot) -> bool {
        let strand1 = matches!(slot, Slot::In1 | Slot::Out1);
        match sign {
            Sign::Positive => strand1,
            Sign::Negative => !strand1,
        }
    }

    /// Does segment `s` pass over at its tail crossing?
    pub fn over_at_tail(&self, s: usize) -> bool {
        let e = &self.ends[s];
        let slot = if e.tail_slot_is_out1 { Slot::Out1 } else { Slot::Out2 };
        Self::slot_is_over(self.crossings[e.tail_crossing].sign, slot)
    }

    /// Does segment `s` pass over at its head crossing?
    pub fn over_at_head(&self, s: usize) -> bool {
        let e = &self.ends[s];
        let slot = if e.head_slot_is_in1 { Slot::In1 } else { Slot::In2 };
        Self::slot_is_over(self.crossings[e.head_crossing].sign, slot)
    }

    fn trace_regions_internal(&mut self) -> Result<()> {
        let assignment = trace_regions(self)?;
        let RegionTrace {
            regions,
            left_region,
            right_region,
            corner_regions,
        } = assignment;
        for (ci, regs) in corner_regions.iter().enumerate() {
            self.crossings[ci].region_n = regs[0];
            self.crossings[ci].region_w = regs[1];
            self.crossings[ci].region_s = regs[2];
            self.crossings[ci].region_e = regs[3];
        }
        self.regions = regions;
        self.left_region = left_region;
        self.right_region = right_region;
        // Default unbounded region: the one left of segment 0.
        self.unbounded_region = self.left_region[0];
        for (i, r) in self.regions.iter_mut().enumerate() {
            r.unbounded = i == self.unbounded_region;
        }
        Ok(())
    }
}

fn validate_slots(crossings: &[Crossing]) -> Result<usize> {
    let mut max_id = 0;
    for c in crossings {
        max_id = max_id.max(c.in1).max(c.in2).max(c.out1).max(c.out2);
    }
    let n = max_id + 1;
    let mut in_count = vec![0usize; n];
    let mut out_count = vec![0usize; n];
    for c in crossings {
        in_count[c.in1] += 1;
        in_count[c.in2] += 1;
        out_count[c.out1] += 1;
        out_count[c.out2] += 1;
    }
    for s in 0..n {
        if in_count[s] != 1 || out_count[s] != 1 {
            return Err(Error::InvalidDiagram(format!(
                "segment {s} used {} times as input and {} as output (need 1 and 1)",
                in_count[s], out_count[s]
            )));
        }
    }
    Ok(n)
}

fn segment_ends(crossings: &[Crossing], n: usize) -> Vec<SegmentEnds> {
    let mut ends = vec![
        SegmentEnds {
            tail_crossing: usize::MAX,
            tail_slot_is_out1: false,
            head_crossing: usize::MAX,
            head_slot_is_in1: false,
        };
        n
    ];
    for (ci, c) in crossings.iter().enumerate() {
        ends[c.out1].tail_crossing = ci;
        ends[c.out1].tail_slot_is_out1 = true;
        ends[c.out2].tail_crossing = ci;
        ends[c.out2].tail_slot_is_out1 = false;
        ends[c.in1].head_crossing = ci;
        ends[c.in1].head_slot_is_in1 = true;
        ends[c.in2].head_crossing = ci;
        ends[c.in2].head_slot_is_in1 = false;
    }
    ends
}

fn trace_components(crossings: &[Crossing], n: usize, ends: &[SegmentEnds]) -> Vec<Vec<usize>> {
    // Successor along the strand: in1 -> out1, in2 -> out2.
    let successor = |s: usize| -> usize {
        let e = &ends[s];
        let c = &crossings[e.head_crossing];
        if e.head_slot_is_in1 {
            c.out1
        } else {
            c.out2
        }
    };
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut s = start;
        loop {
            seen[s] = true;
            cycle.push(s);
            s = successor(s);
            if s == start {
                break;
            }
        }
        components.push(cycle);
    }
    components
}

/// A directed traversal of a segment: forward (tail→head) or backward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Dart {
    segment: usize,
    forward: bool,
}

pub(crate) struct RegionTrace {
    pub regions: Vec<Region>,
    pub left_region: Vec<usize>,
    pub right_region: Vec<usize>,
    /// Per crossing: region ids at [N, W, S, E].
    pub corner_regions: Vec<[usize; 4]>,
}

/// Trace the faces of the diagram by walking darts with the face on the left.
///
/// Returns the regions in canonical order (sorted by their boundary segment
/// lists) and checks the Euler count #regions = #crossings + 2.
pub fn trace_regions(diagram: &LinkDiagram) -> Result<Vec<Region>> {
    trace_regions_impl(&diagram.crossings, diagram.n_segments, &diagram.ends).map(|t| t.regions)
}

fn trace_regions_impl(
    crossings: &[Crossing],
    n_segments: usize,
    ends: &[SegmentEnds],
) -> Result<RegionTrace> {
    // Transition: arriving at a crossing along a dart, emit the corner passed
    // and the next dart of the same face (face kept on the left).
    let step = |d: Dart| -> (usize, Corner, Dart) {
        let e = &ends[d.segment];
        if d.forward {
            let ci = e.head_crossing;
            let c = &crossings[ci];
            if e.head_slot_is_in1 {
                // in1 arrives at NW: corner N, continue along out2 forward.
                (ci, Corner::N, Dart { segment: c.out2, forward: true })
            } else {
                // in2 arrives at SW: corner W, continue along in1 backward.
                (ci, Corner::W, Dart { segment: c.in1, forward: false })
            }
        } else {
            let ci = e.tail_crossing;
            let c = &crossings[ci];
            if e.tail_slot_is_out1 {
                // out1 walked backward arrives at SE: corner S, along in2 backward.
                (ci, Corner::S, Dart { segment: c.in2, forward: false })
            } else {
                // out2 walked backward arrives at NE: corner E, along out1 forward.
                (ci, Corner::E, Dart { segment: c.out1, forward: true })
            }
        }
    };

    let all_darts: Vec<Dart> = (0..n_segments)
        .flat_map(|s| {
            [Dart { segment: s, forward: true }, Dart { segment: s, forward: false }]
        })
        .collect();
    let dart_index = |d: Dart| -> usize { 2 * d.segment + usize::from(!d.forward) };

    let mut face_of_dart = vec![usize::MAX; 2 * n_segments];
    let mut faces: Vec<Vec<(usize, Corner, Dart)>> = Vec::new();
    for &start in &all_darts {
        if face_of_dart[dart_index(start)] != usize::MAX {
            continue;
        }
        let face_id = faces.len();
        let mut boundary = Vec::new();
        let mut d = start;
        loop {
            if face_of_dart[dart_index(d)] != usize::MAX {
                return Err(Error::InvalidDiagram(
                    "face tracing did not close up".into(),
                ));
            }
            face_of_dart[dart_index(d)] = face_id;
            let (ci, corner, next) = step(d);
            boundary.push((ci, corner, d));
            d = next;
            if d == start {
                break;
            }
        }
        faces.push(boundary);
    }

    if faces.len() != crossings.len() + 2 {
        return Err(Error::InvalidDiagram(format!(
            "face count {} does not match crossings + 2 = {}; \
             the rotation system is not planar on S²",
            faces.len(),
            crossings.len() + 2
        )));
    }

    // Canonical region order: sort by the sorted list of boundary segments.
    let mut keyed: Vec<(Vec<usize>, usize)> = faces
        .iter()
        .enumerate()
        .map(|(i, boundary)| {
            let mut segs: Vec<usize> = boundary.iter().map(|(_, _, d)| d.segment).collect();
            segs.sort_unstable();
            segs.dedup();
            (segs, i)
        })
        .collect();
    keyed.sort();
    let mut new_id = vec![usize::MAX; faces.len()];
    for (rank, (_, old)) in keyed.iter().enumerate() {
        new_id[*old] = rank;
    }

    let mut regions: Vec<Region> = keyed
        .iter()
        .map(|(segs, old)| Region {
            corners: faces[*old].iter().map(|&(ci, corner, _)| (ci, corner)).collect(),
            segments: segs.clone(),
            unbounded: false,
        })
        .collect();

    let mut corner_regions = vec![[usize::MAX; 4]; crossings.len()];
    for (old, boundary) in faces.iter().enumerate() {
        for &(ci, corner, _) in boundary {
            let idx = match corner {
                Corner::N => 0,
                Corner::W => 1,
                Corner::S => 2,
                Corner::E => 3,
            };
            corner_regions[ci][idx] = new_id[old];
        }
    }
    for (ci, regs) in corner_regions.iter().enumerate() {
        if regs.iter().any(|&r| r == usize::MAX) {
            return Err(Error::InvalidDiagram(format!(
                "crossing {ci} has an untraced corner"
            )));
        }
    }

    // Left/right regions per segment. Walking a segment forward, the face on
    // the left is the face of its forward dart; on the right, of the backward
    // dart.
    let mut left_region = vec![usize::MAX; n_segments];
    let mut right_region = vec![usize::MAX; n_segments];
    for s in 0..n_segments {
        left_region[s] = new_id[face_of_dart[2 * s]];
        right_region[s] = new_id[face_of_dart[2 * s + 1]];
    }

    // Cross-check against the corner table: a segment entering as in1 has the
    // N region on its left and W on its right, and so on.
    for (ci, c) in crossings.iter().enumerate() {
        let [n, w, s, e] = corner_regions[ci];
        let checks = [
            (c.in1, n, w),
            (c.in2, w, s),
            (c.out1, e, s),
            (c.out2, n, e),
        ];
        for (seg, l, r) in checks {
            if left_region[seg] != l || right_region[seg] != r {
                return Err(Error::InvalidDiagram(format!(
                    "segment {seg} has inconsistent side regions at crossing {ci}"
                )));
            }
        }
    }

    let mut corner_total = 0usize;
    for r in &regions {
        corner_total += r.corners.len();
    }
    if corner_total != 4 * crossings.len() {
        return Err(Error::InvalidDiagram(format!(
            "traced {} corners, expected {}",
            corner_total,
            4 * crossings.len()
        )));
    }
    regions.shrink_to_fit();

    Ok(RegionTrace {
        regions,
        left_region,
        right_region,
        corner_regions,
    })
}

/// Parse braid-word text: either space-separated `s1 s2 S1` tokens (capital =
/// inverse) or compact letters `aAbB` (a = σ₁, b = σ₂, lowercase positive).
pub fn parse_braid_word(text: &str) -> Result<(Vec<(usize, Sign)>, usize)> {
    let mut word = Vec::new();
    let mut max_gen = 0usize;
    for token in text.split_whitespace() {
        if let Some(rest) = token.strip_prefix('s').or_else(|| token.strip_prefix('S')) {
            let negative = token.starts_with('S');
            let (idx_str, negative) = match rest.strip_suffix("^-1") {
                Some(head) => (head, true),
                None => (rest, negative),
            };
            let i: usize = idx_str.parse().map_err(|_| {
                Error::InvalidDiagram(format!("bad braid token '{token}'"))
            })?;
            if i == 0 {
                return Err(Error::InvalidDiagram("generator index 0 (indices start at 1)".into()));
            }
            max_gen = max_gen.max(i);
            word.push((i, if negative { Sign::Negative } else { Sign::Positive }));
        } else {
            for ch in token.chars() {
                if ch.is_ascii_lowercase() {
                    let i = (ch as usize) - ('a' as usize) + 1;
                    max_gen = max_gen.max(i);
                    word.push((i, Sign::Positive));
                } else if ch.is_ascii_uppercase() {
                    let i = (ch as usize) - ('A' as usize) + 1;
                    max_gen = max_gen.max(i);
                    word.push((i, Sign::Negative));
                } else {
                    return Err(Error::InvalidDiagram(format!("bad braid letter '{ch}'")));
                }
            }
        }
    }
    if word.is_empty() {
        return Err(Error::InvalidDiagram("empty braid word".into()));
    }
    Ok((word, max_gen + 1))
}

/// Per-diagram summary: component count, writhes, and segment classes.
#[derive(Debug, Clone, Serialize)]
pub struct DiagramStats {
    pub components: usize,
    pub writhe: Vec<i64>,
    pub segment_classes: Vec<crate::decoration::SegmentClass>,
}

pub fn diagram_stats(diagram: &LinkDiagram) -> DiagramStats {
    DiagramStats {
        components: diagram.components.len(),
        writhe: (0..diagram.components.len()).map(|j| diagram.writhe(j)).collect(),
        segment_classes: (0..diagram.n_segments)
            .map(|s| crate::decoration::segment_class(diagram, s))
            .collect(),
    }
}

/// Breadth-first search in the region adjacency graph. Returns, for each
/// region, the segment edge leading back toward `from` (None at the source),
/// preferring shorter paths and lower segment ids.
pub(crate) fn region_bfs(diagram: &LinkDiagram, from: usize) -> Vec<Option<(usize, usize)>> {
    let n = diagram.regions.len();
    let mut back: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut dist = vec![usize::MAX; n];
    dist[from] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(from);
    while let Some(r) = queue.pop_front() {
        // Deterministic order: segments in increasing id.
        for s in 0..diagram.n_segments {
            let (l, rr) = (diagram.left_region[s], diagram.right_region[s]);
            let other = if l == r {
                rr
            } else if rr == r {
                l
            } else {
                continue;
            };
            if dist[other] == usize::MAX {
                dist[other] = dist[r] + 1;
                back[other] = Some((s, r));
                queue.push_back(other);
            }
        }
    }
    back
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kink_counts() {
        // One-crossing positive kink: closure of σ₁ on two strands.
        let d = LinkDiagram::from_braid(&[(1, Sign::Positive)], 2, true).unwrap();
        assert_eq!(d.n_segments, 2);
        assert_eq!(d.regions.len(), 3);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.writhe(0), 1);
    }

    #[test]
    fn trefoil_counts() {
        let d = LinkDiagram::parse("a a a").unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.n_segments, 6);
        assert_eq!(d.regions.len(), 5);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.writhe(0), 3);
    }

    #[test]
    fn trefoil_braiding_order() {
        // The braid closure numbers segments so that the crossings read
        // (1,2)->(3,4), (3,4)->(5,6), (5,6)->(1,2) in 1-based labels.
        let d = LinkDiagram::trefoil();
        let c = &d.crossings;
        assert_eq!((c[0].in1, c[0].in2, c[0].out2, c[0].out1), (0, 1, 2, 3));
        assert_eq!((c[1].in1, c[1].in2, c[1].out2, c[1].out1), (2, 3, 4, 5));
        assert_eq!((c[2].in1, c[2].in2, c[2].out2, c[2].out1), (4, 5, 0, 1));
    }

    #[test]
    fn figure_eight_counts() {
        let d = LinkDiagram::figure_eight();
        assert_eq!(d.n_crossings(), 4);
        assert_eq!(d.n_segments, 8);
        assert_eq!(d.regions.len(), 6);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.writhe(0), 0);
        // Consecutive labeling along the knot.
        assert_eq!(d.components[0], vec![0, 1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn figure_eight_from_braid_matches_counts() {
        // (σ₁ σ₂⁻¹)² closure is also a figure-eight diagram.
        let d = LinkDiagram::parse("aB aB").unwrap();
        assert_eq!(d.n_crossings(), 4);
        assert_eq!(d.n_segments, 8);
        assert_eq!(d.regions.len(), 6);
        assert_eq!(d.writhe(0), 0);
    }

    #[test]
    fn torus_2_5_segment_count() {
        let d = LinkDiagram::parse("s1 s1 s1 s1 s1").unwrap();
        assert_eq!(d.n_segments, 10);
        assert_eq!(d.regions.len(), 7);
        // Oracle: the same diagram written as an explicit crossing list.
        let json = r#"{"crossings":[
            {"sign":1,"in1":0,"in2":1,"out1":3,"out2":2},
            {"sign":1,"in1":2,"in2":3,"out1":5,"out2":4},
            {"sign":1,"in1":4,"in2":5,"out1":7,"out2":6},
            {"sign":1,"in1":6,"in2":7,"out1":9,"out2":8},
            {"sign":1,"in1":8,"in2":9,"out1":1,"out2":0}]}"#;
        let d2 = LinkDiagram::parse(json).unwrap();
        assert_eq!(d2.n_segments, 10);
        assert_eq!(d2.regions.len(), 7);
        assert_eq!(d.writhe(0), d2.writhe(0));
        for (a, b) in d.crossings.iter().zip(&d2.crossings) {
            assert_eq!((a.in1, a.in2, a.out1, a.out2), (b.in1, b.in2, b.out1, b.out2));
        }
    }

    #[test]
    fn segment_double_incidence() {
        let d = LinkDiagram::parse("a a a").unwrap();
        let mut uses = vec![0; d.n_segments];
        for c in &d.crossings {
            for s in [c.in1, c.in2, c.out1, c.out2] {
                uses[s] += 1;
            }
        }
        assert!(uses.iter().all(|&u| u == 2));
    }

    #[test]
    fn corner_count_matches() {
        for word in ["a a a", "aB aB", "s1 s1 s1 s1 s1"] {
            let d = LinkDiagram::parse(word).unwrap();
            let total: usize = d.regions.iter().map(|r| r.corners.len()).sum();
            assert_eq!(total, 4 * d.n_crossings());
        }
    }

    #[test]
    fn writhe_is_exponent_sum() {
        let d = LinkDiagram::parse("a a A a a").unwrap();
        assert_eq!(d.writhe(0), 3);
    }

    #[test]
    fn bad_inputs() {
        assert!(LinkDiagram::parse("").is_err());
        assert!(LinkDiagram::parse("s0").is_err());
        assert!(LinkDiagram::from_braid(&[(3, Sign::Positive)], 2, true).is_err());
        assert!(LinkDiagram::from_braid(&[(1, Sign::Positive)], 2, false).is_err());
        // Segment used twice as input.
        let json = r#"{"crossings":[
            {"sign":1,"in1":0,"in2":0,"out1":1,"out2":1}]}"#;
        assert!(LinkDiagram::parse(json).is_err());
    }

    #[test]
    fn hopf_link_two_components() {
        let d = LinkDiagram::parse("a a").unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.regions.len(), 4);
        // Each component's writhe counts only self-crossings: none here.
        assert_eq!(d.writhe(0), 0);
        assert_eq!(d.writhe(1), 0);
    }

    #[test]
    fn unknot_stats() {
        let d = LinkDiagram::unknot();
        let stats = diagram_stats(&d);
        assert_eq!(stats.components, 1);
        assert_eq!(stats.writhe, vec![0]);
    }
}
