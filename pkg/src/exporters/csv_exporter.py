"""
CSV exporter for check and convergence reports
"""
from pathlib import Path
from typing import Dict, List, Optional, Sequence
from datetime import datetime
import pandas as pd
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import config
from src.integrals.convergence import CONVERGENCE_COLUMNS, ConvergenceRow
from src.numerics.precision import PrecisionContext
from src.utils.logger import get_logger

logger = get_logger()

class CSVExporter:
    """Export report rows to CSV format"""
    
    def __init__(self, output_dir: Optional[Path] = None):
        """
        Initialize the CSV exporter
        
        Args:
            output_dir (Optional[Path]): Output directory for CSV files
        """
        self.output_dir = Path(output_dir or config.EXPORTS_DIR)
        self.output_dir.mkdir(parents=True, exist_ok=True)
    
    def export(self, rows: List[Dict[str, str]], filename: Optional[str] = None,
               columns: Optional[Sequence[str]] = None) -> Path:
        """
        Export rows to CSV
        
        Args:
            rows (List[Dict[str, str]]): Rows with every value already rendered as text
            filename (Optional[str]): Output filename (absolute paths are used as given)
            columns (Optional[Sequence[str]]): Column order; defaults to the first row's keys
            
        Returns:
            Path: Path to the exported file
        """
        if not rows:
            raise ValueError("refusing to write an empty report")
        if not filename:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filename = f"laguerre_report_{timestamp}.csv"
        
        filepath = self.output_dir / filename
        columns = list(columns or rows[0].keys())
        
        try:
            # Strings only, so the bytes never depend on pandas float formatting
            df = pd.DataFrame(rows, columns=columns, dtype=str)
            df.to_csv(filepath, index=False, lineterminator="\n", encoding="utf-8")
            
            logger.info(f"Exported {len(rows)} rows to CSV: {filepath}")
            return filepath
            
        except Exception as e:
            logger.error(f"Failed to export to CSV: {str(e)}")
            raise
    
    def emit_csv(self, rows: List[ConvergenceRow], filename: str, ctx: PrecisionContext) -> Path:
        """
        Export a convergence table with the columns method,alpha,nu,N,value,analytic,rel_err
        
        Args:
            rows (List[ConvergenceRow]): Rows in (method, alpha, N) order
            filename (str): Output filename
            ctx (PrecisionContext): Precision that fixes the number of printed digits
            
        Returns:
            Path: Path to the exported file
        """
        return self.export([row.as_record(ctx) for row in rows], filename, CONVERGENCE_COLUMNS)
    
    def export_by_method(self, rows: List[ConvergenceRow], ctx: PrecisionContext,
                         prefix: str = "converge") -> Dict[str, Path]:
        """
        Export a convergence table to one CSV file per series method (one curve per file)
        
        Args:
            rows (List[ConvergenceRow]): Convergence rows
            ctx (PrecisionContext): Output precision
            prefix (str): Filename prefix
            
        Returns:
            Dict[str, Path]: Method names to file paths
        """
        methods = {}
        for row in rows:
            methods.setdefault(row.method, []).append(row)
        
        exported_files = {}
        for method, method_rows in methods.items():
            exported_files[method] = self.emit_csv(method_rows, f"{prefix}_{method}.csv", ctx)
        
        return exported_files
