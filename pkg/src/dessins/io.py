"""Reading and writing dessin and group files.

Dessin text files hold one or more blocks

    degree 7
    x = (1,5,2)(3,4,6)
    y = (0,4)(1,6)
    z = (0,3,6,2,5,1,4)

separated by blank lines; '#' starts a comment.  JSON files hold an object
(or a list of objects) with keys degree, x, y and optionally z.  Group files
are JSON {"degree": n, "generators": ["(0,1,2)", ...]} or text with a
'degree n' line followed by one generator per line.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .dessin import Dessin
from .groups import PermGroup, group_from_json, group_to_json

SCHEMA_VERSION = 1


def _read(source) -> str:
    if isinstance(source, Path):
        return source.read_text()
    text = str(source)
    if "\n" in text or text.lstrip().startswith(("{", "[", "degree")):
        return text
    return Path(text).read_text()


def parse_dessins(text: str) -> list[Dessin]:
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(stripped)
        if isinstance(data, dict) and "dessins" in data:
            data = data["dessins"]
        if isinstance(data, dict):
            data = [data]
        return [Dessin.from_json(d) for d in data]
    blocks: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if re.match(r"degree\s+\d+", line):
            blocks.append([])
        if line:
            if not blocks:
                raise ValueError("dessin text must start with a 'degree n' line")
            blocks[-1].append(line)
    if not blocks:
        raise ValueError("no dessin found")
    return [Dessin.from_text("\n".join(b)) for b in blocks]


def read_dessins(source) -> list[Dessin]:
    return parse_dessins(_read(source))


def read_dessin(source) -> Dessin:
    return read_dessins(source)[0]


def dessins_to_text(dessins) -> str:
    return "\n".join(D.to_text() for D in dessins)


def dessins_to_json(dessins) -> dict:
    return {"schema": SCHEMA_VERSION, "dessins": [D.to_json() for D in dessins]}


def parse_group(text: str) -> PermGroup:
    stripped = text.strip()
    if stripped.startswith("{"):
        return group_from_json(json.loads(stripped))
    n = None
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"degree\s+(\d+)", line)
        if m:
            n = int(m.group(1))
        else:
            gens.append(line.split("=", 1)[-1].strip())
    if n is None:
        raise ValueError("missing 'degree n' line")
    return PermGroup.from_cycles(gens, n)


def read_group(source) -> PermGroup:
    return parse_group(_read(source))


def group_to_text(G: PermGroup) -> str:
    data = group_to_json(G)
    return "\n".join([f"degree {data['degree']}"] + data["generators"]) + "\n"
