"""Text, JSON, LaTeX and CSV renderings of classes and tables."""
import json
from typing import Any, Dict

import pandas as pd

from .chow import SchubertClass
from .poly import EquivPoly

FORMATS = ("text", "json", "latex", "csv")


def _coeff_text(p: EquivPoly) -> str:
    text = p.to_str()
    return text if p.is_constant() or len(p.terms) == 1 else f"({text})"


def class_to_dict(c: SchubertClass) -> Dict[str, Any]:
    space = c.space
    return {
        "space": str(space),
        "equivariant": c.equivariant,
        "terms": [
            {"label": space.label(w), "word": space.word(w), "coeff": p.to_str(), "coeff_terms": p.to_json()}
            for w, p in c.sorted_items()
        ],
    }


def class_to_text(c: SchubertClass) -> str:
    """Coefficient then bracketed label, e.g. [21]+3[2]+3[11]+8[1]+6[()]."""
    if c.is_zero():
        return "0"
    pieces = []
    for w, p in c.sorted_items():
        label = f"[{c.space.label(w)}]"
        if p == 1:
            pieces.append(("+", label))
        elif p == -1:
            pieces.append(("-", label))
        elif p.is_constant():
            value = p.constant_term()
            pieces.append(("-" if value < 0 else "+", f"{abs(value)}{label}"))
        else:
            pieces.append(("+", f"{_coeff_text(p)}{label}"))
    text = "".join(sign + body for sign, body in pieces)
    return text[1:] if text.startswith("+") else text


def class_to_latex(c: SchubertClass) -> str:
    return "$" + class_to_text(c).replace("[", "[X_{").replace("]", "}]").replace("*", " ") + "$"


def class_to_frame(c: SchubertClass) -> pd.DataFrame:
    rows = class_to_dict(c)["terms"]
    return pd.DataFrame(rows, columns=["label", "word", "coeff"]).set_index("label")


def render_class(c: SchubertClass, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(class_to_dict(c), indent=2)
    if fmt == "latex":
        return class_to_latex(c)
    if fmt == "csv":
        return class_to_frame(c).to_csv()
    return class_to_text(c)


def render_frame(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == "json":
        return frame.to_json(orient="split", indent=2)
    if fmt == "latex":
        return frame.to_latex()
    if fmt == "text":
        return frame.to_string()
    return frame.to_csv()


def render_mapping(data: Dict[str, Any], fmt: str) -> str:
    """Label-keyed scalars (multiplicities, Euler obstructions, localizations)."""
    if fmt == "json":
        return json.dumps(data, indent=2, default=str)
    frame = pd.DataFrame({"value": [str(v) for v in data.values()]}, index=list(data.keys()))
    return render_frame(frame, fmt)
