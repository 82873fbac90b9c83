"""
JSON exporter for check and convergence reports
"""
import json
from pathlib import Path
from typing import Dict, List, Optional
from datetime import datetime
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import config
from src.integrals.convergence import ConvergenceRow
from src.numerics.precision import PrecisionContext
from src.utils.logger import get_logger

logger = get_logger()

class JSONExporter:
    """Export report rows to JSON format"""
    
    def __init__(self, output_dir: Optional[Path] = None):
        """
        Initialize the JSON exporter
        
        Args:
            output_dir (Optional[Path]): Output directory for JSON files
        """
        self.output_dir = Path(output_dir or config.EXPORTS_DIR)
        self.output_dir.mkdir(parents=True, exist_ok=True)
    
    def export(self, rows: List[Dict[str, str]], filename: Optional[str] = None) -> Path:
        """
        Export rows as a flat JSON array of objects with the CSV field names
        
        Args:
            rows (List[Dict[str, str]]): Rendered rows
            filename (Optional[str]): Output filename
            
        Returns:
            Path: Path to the exported file
        """
        if not rows:
            raise ValueError("refusing to write an empty report")
        if not filename:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filename = f"laguerre_report_{timestamp}.json"
        
        filepath = self.output_dir / filename
        
        try:
            with open(filepath, 'w', encoding='utf-8', newline='\n') as f:
                json.dump(rows, f, ensure_ascii=False, indent=2)
                f.write("\n")
            
            logger.info(f"Exported {len(rows)} rows to {filepath}")
            return filepath
            
        except Exception as e:
            logger.error(f"Failed to export to JSON: {str(e)}")
            raise
    
    def emit_json(self, rows: List[ConvergenceRow], filename: str, ctx: PrecisionContext) -> Path:
        """Export a convergence table with the same fields as its CSV form"""
        return self.export([row.as_record(ctx) for row in rows], filename)
