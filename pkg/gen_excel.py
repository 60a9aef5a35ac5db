# gen_excel.py

import logging
import os
from typing import Dict, List, Optional

import pandas as pd
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

logger = logging.getLogger(__name__)

# Define Custom Fills
label_fill = PatternFill(start_color="00FFFF", end_color="00FFFF", fill_type="solid")     # Light blue
disagree_fill = PatternFill(start_color="FF9999", end_color="FF9999", fill_type="solid")  # Light red
error_fill = PatternFill(start_color="FFFF99", end_color="FFFF99", fill_type="solid")     # Cornsilk

# Define custom fonts
title_font = Font(name="Times New Roman", size=14, bold=True, italic=True)
label_font = Font(name="Times New Roman", size=10, bold=True, italic=True)
data_arial_font = Font(name="Arial", size=10)

center_alignment = Alignment(horizontal="center", vertical="center")

thin_side = Side(style='thin', color='000000')

TITLE_ROW = 1
HEADER_ROW = 3


def apply_table_border(ws, row, start_col, end_col):
    """
    Applies a thin border around a group of cells in a specified row from start_col to end_col.

    :param ws: The worksheet object.
    :param row: The row number where the group is located.
    :param start_col: The starting column number of the group.
    :param end_col: The ending column number of the group.
    """
    for col in range(start_col, end_col + 1):
        cell = ws.cell(row=row, column=col)
        existing = cell.border
        cell.border = Border(
            top=thin_side,
            bottom=thin_side,
            left=thin_side if col == start_col else existing.left,
            right=thin_side if col == end_col else existing.right,
        )


def title_fill_range(ws, row_number, left_col, right_col):
    for cc in range(left_col, right_col + 1):
        cell = ws.cell(row_number, cc)
        if cell.fill.patternType is None:
            cell.fill = label_fill


def format_workbook(writer):
    """
    removes gridlines from all worksheets.
    """
    for sheetname in writer.book.sheetnames:
        writer.book[sheetname].sheet_view.showGridLines = False


def create_xls(xls_filename):
    if os.path.exists(xls_filename):
        logger.info(f"Overwriting existing file: {xls_filename}")
    directory = os.path.dirname(xls_filename)
    if directory:
        os.makedirs(directory, exist_ok=True)
    return pd.ExcelWriter(xls_filename, engine='openpyxl', mode='w')


def write_table_sheet(writer, sheet_name: str, title: str, frame: pd.DataFrame,
                      status_column: Optional[str] = "status"):
    """
    Write a flat table below a title row, with labelled headers, thin
    borders and DISAGREE / error rows highlighted.
    """
    frame.to_excel(writer, sheet_name=sheet_name, index=False, startrow=HEADER_ROW - 1)
    ws = writer.book[sheet_name]

    ws.cell(row=TITLE_ROW, column=1, value=title).font = title_font
    n_cols = max(len(frame.columns), 1)

    for col in range(1, n_cols + 1):
        cell = ws.cell(row=HEADER_ROW, column=col)
        cell.font = label_font
        cell.alignment = center_alignment
    title_fill_range(ws, HEADER_ROW, 1, n_cols)
    apply_table_border(ws, HEADER_ROW, 1, n_cols)

    status_index = None
    if status_column and status_column in frame.columns:
        status_index = list(frame.columns).index(status_column)

    for offset, values in enumerate(frame.itertuples(index=False)):
        row = HEADER_ROW + 1 + offset
        fill = None
        if status_index is not None:
            status = values[status_index]
            if status == "DISAGREE":
                fill = disagree_fill
            elif status == "error":
                fill = error_fill
        for col in range(1, n_cols + 1):
            cell = ws.cell(row=row, column=col)
            cell.font = data_arial_font
            if fill is not None:
                cell.fill = fill
        apply_table_border(ws, row, 1, n_cols)

    for col, name in enumerate(frame.columns, start=1):
        width = max([len(str(name))] + [len(str(v)) for v in frame[name].tolist()]) + 2
        ws.column_dimensions[get_column_letter(col)].width = min(width, 40)
    ws.freeze_panes = ws.cell(row=HEADER_ROW + 1, column=1).coordinate


def write_summary_sheet(writer, summaries: Dict[str, Dict[str, int]]):
    """One row per verified family with its agree / disagree / error counts."""
    rows = [{"family": family, **counts} for family, counts in summaries.items()]
    frame = pd.DataFrame(rows, columns=["family", "total", "agree", "disagree", "error"])
    write_table_sheet(writer, "Summary", "Verification summary", frame, status_column=None)
    ws = writer.book["Summary"]
    for offset, row in enumerate(rows):
        if row["disagree"]:
            for col in range(1, 6):
                ws.cell(row=HEADER_ROW + 1 + offset, column=col).fill = disagree_fill


def generate_report_workbook(xls_filename: str, verification_reports: Optional[List] = None,
                             census_frame: Optional[pd.DataFrame] = None) -> str:
    """
    Write verification reports (one sheet per family plus a summary) and/or
    a census table to an Excel workbook.
    """
    writer = create_xls(xls_filename)

    if verification_reports:
        write_summary_sheet(writer, {r.family: r.summary for r in verification_reports})
        for report in verification_reports:
            write_table_sheet(writer, f"verify-{report.family}",
                              f"Simplicity of 1 across {report.family}", report.to_frame())

    if census_frame is not None:
        write_table_sheet(writer, "Census", "Vertex truncations of maps", census_frame,
                          status_column=None)

    if not writer.book.sheetnames:
        writer.book.create_sheet("Empty")

    format_workbook(writer)
    writer.close()
    logger.info(f"Workbook written to {xls_filename}")
    return xls_filename
