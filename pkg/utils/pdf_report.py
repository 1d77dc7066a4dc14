from fpdf import FPDF
from datetime import datetime
import os


def _safe(text):
    # core fonts are latin-1 only
    return str(text).encode("latin-1", "replace").decode("latin-1")


def generate_pdf(subject, reports, info=None, file_path=None, stamp=True):
    pdf = FPDF()
    pdf.add_page()
    pdf.set_font("Arial", "B", 16)
    pdf.cell(200, 10, _safe(f"Quasialgebra Report: {subject}"), ln=True, align='C')
    pdf.set_font("Arial", "", 12)

    # Timestamp
    if stamp:
        pdf.ln(5)
        pdf.cell(0, 10, f"Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}", ln=True)

    # Summary section
    if info:
        pdf.ln(10)
        pdf.set_font("Arial", "B", 14)
        pdf.cell(0, 10, " Summary", ln=True)
        pdf.set_font("Arial", "", 12)
        for key, value in info.items():
            pdf.cell(0, 10, _safe(f"{key}: {value}"), ln=True)

    # Checks section
    pdf.ln(5)
    pdf.set_font("Arial", "B", 14)
    pdf.cell(0, 10, " Checks", ln=True)
    pdf.set_font("Arial", "", 12)

    for r in reports:
        pdf.cell(0, 10,
                 _safe(f"{r.name}: {r.status} | checked: {r.checked} | witnesses: {len(r.witnesses)}"),
                 ln=True)
        for w in r.witnesses[:3]:
            pdf.multi_cell(0, 8, _safe(f"    witness: {w}"))

    if file_path is None:
        os.makedirs("data", exist_ok=True)
        file_path = f"data/report_{datetime.now().strftime('%Y%m%d_%H%M%S')}.pdf"
    else:
        folder = os.path.dirname(file_path)
        if folder:
            os.makedirs(folder, exist_ok=True)
    pdf.output(file_path)

    return file_path
