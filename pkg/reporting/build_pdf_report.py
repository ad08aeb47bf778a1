import io

import pandas as pd
from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.units import inch
from reportlab.lib.utils import ImageReader
from reportlab.pdfgen import canvas
from reportlab.platypus import Table, TableStyle

MAX_COLS = 10
MAX_ROWS = 40


def results_tables(summary):
    """Achata os resultados do resumo em tabelas (uma por chave de primeiro nível)."""
    tables = {}
    results = summary.get("results")
    if results:
        scalars = {k: v for k, v in results.items() if not isinstance(v, (dict, list))}
        if scalars:
            tables["resumo"] = pd.DataFrame([scalars])
        for key, value in results.items():
            if key in scalars:
                continue
            frame = pd.json_normalize(value if isinstance(value, list) else [value])
            # listas aninhadas não cabem numa célula
            nested = [col for col in frame.columns if frame[col].map(lambda v: isinstance(v, list)).any()]
            tables[key] = frame.drop(columns=nested)
    for experiment in summary.get("experiments", [summary]):
        aggregate = experiment.get("aggregate")
        if aggregate:
            name = experiment.get("name") or experiment["config"]["name"]
            tables[f"{name} (agregado)"] = pd.DataFrame(aggregate)
    return tables


def _draw_table(c, frame, y_pos, width, height):
    frame = frame.iloc[:MAX_ROWS, :MAX_COLS]
    data = [frame.columns.astype(str).tolist()] + frame.astype(str).values.tolist()
    table = Table(data)
    table.setStyle(
        TableStyle(
            [
                ("BACKGROUND", (0, 0), (-1, 0), colors.grey),
                ("TEXTCOLOR", (0, 0), (-1, 0), colors.whitesmoke),
                ("ALIGN", (0, 0), (-1, -1), "LEFT"),
                ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
                ("FONTSIZE", (0, 0), (-1, -1), 7),
                ("BACKGROUND", (0, 1), (-1, -1), colors.white),
                ("GRID", (0, 0), (-1, -1), 0.5, colors.black),
            ]
        )
    )
    _, table_height = table.wrapOn(c, width - 2 * inch, height)
    if y_pos - table_height < inch:
        c.showPage()
        y_pos = height - inch
    table.drawOn(c, inch, y_pos - table_height)
    return y_pos - table_height - 20


def _draw_image(c, img_bytes, y_pos, width, height):
    reader = ImageReader(io.BytesIO(img_bytes))
    img_width, img_height = reader.getSize()
    draw_width = width - 2 * inch
    draw_height = draw_width * img_height / img_width
    if y_pos - draw_height < inch:
        c.showPage()
        y_pos = height - inch
    c.drawImage(reader, inch, y_pos - draw_height, width=draw_width, height=draw_height)
    return y_pos - draw_height - 20


def build_pdf_report(summary, images=None, title="Relatório de Benchmark de Memória"):
    """Gera o relatório em PDF (ReportLab): cabeçalho, tabelas de resultado e gráficos."""
    buffer = io.BytesIO()
    c = canvas.Canvas(buffer, pagesize=A4, invariant=1)
    width, height = A4

    c.setFont("Helvetica-Bold", 14)
    c.drawString(inch, height - inch, title)
    c.setFont("Helvetica", 10)
    subtitle = summary.get("preset") or summary.get("config", {}).get("name", "")
    description = summary.get("description", "")
    text = c.beginText(inch, height - inch - 20)
    text.textLines(f"Experimento: {subtitle}\n{description}")
    c.drawText(text)
    y_pos = height - inch - 60

    for name, frame in results_tables(summary).items():
        c.setFont("Helvetica-Bold", 11)
        c.drawString(inch, y_pos, str(name))
        y_pos -= 14
        y_pos = _draw_table(c, frame, y_pos, width, height)

    for name, img_bytes in (images or {}).items():
        y_pos = _draw_image(c, img_bytes, y_pos, width, height)

    c.save()
    return buffer.getvalue()
