"""Recover passage data from emitted SVG geometry alone."""

import re
import xml.etree.ElementTree as ET
from collections import Counter

NS = "{http://www.w3.org/2000/svg}"


def passage_counts(svg: str) -> Counter:
    """``(component, generator) -> passages``, both 0-based.

    A passage belongs to the dotted circle whose centre its midpoint lies
    on, and to the component group that contains it.
    """
    root = ET.fromstring(svg)
    centres = sorted(float(e.get("cx")) for e in root.iter(NS + "ellipse") if e.get("class") == "dotted")
    counts = Counter()
    for g in root.iter(NS + "g"):
        m = re.fullmatch(r"component-(\d+)", g.get("id", ""))
        if not m or g.get("class") != "component":
            continue
        comp = int(m.group(1)) - 1
        for line in g.iter(NS + "line"):
            if line.get("class") != "passage":
                continue
            mid = (float(line.get("x1")) + float(line.get("x2"))) / 2
            hits = [j for j, cx in enumerate(centres) if abs(cx - mid) < 1e-6]
            assert len(hits) == 1, f"passage at x={mid} is not centred on a dotted circle"
            counts[comp, hits[0]] += 1
    return counts


def signs(svg: str) -> dict:
    """``component -> [+1/-1 per passage, in document order]`` from arrow direction."""
    root = ET.fromstring(svg)
    out = {}
    for g in root.iter(NS + "g"):
        m = re.fullmatch(r"component-(\d+)", g.get("id", ""))
        if not m:
            continue
        out[int(m.group(1)) - 1] = [
            1 if float(line.get("x2")) > float(line.get("x1")) else -1
            for line in g.iter(NS + "line") if line.get("class") == "passage"
        ]
    return out
