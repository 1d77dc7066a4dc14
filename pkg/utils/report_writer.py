# utils/report_writer.py
import json

REPORT_VERSION = 1


def render_text(subject, reports, info=None, table=None):
    """Line-oriented report: a header, optional info lines, then one block per check."""
    out = [f"report_version = {REPORT_VERSION}", f"subject = {subject}"]
    for key, value in (info or {}).items():
        out.append(f"{key} = {value}")
    for report in reports:
        out.append("")
        out.extend(report.lines())
    if table is not None:
        out.append("")
        out.append("[table]")
        out.extend(table)
    return "\n".join(out) + "\n"


def render_json(subject, reports, info=None, table=None):
    document = {
        "report_version": REPORT_VERSION,
        "subject": subject,
        "info": {k: str(v) for k, v in (info or {}).items()},
        "checks": [r.to_dict() for r in reports],
    }
    if table is not None:
        document["table"] = list(table)
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def render(subject, reports, info=None, table=None, machine=False):
    if machine:
        return render_json(subject, reports, info, table)
    return render_text(subject, reports, info, table)


def table_lines(algebra):
    """'a*b = c' lines for every nonzero basis product, in basis order."""
    out = []
    basis = algebra.basis_elements()
    for x in basis:
        for y in basis:
            product = x * y
            if not product.is_zero():
                out.append(f"{x}*{y} = {product}")
    return out
