from .writer import ReportWriter, table_to_text, to_json

__all__ = ['ReportWriter', 'table_to_text', 'to_json']
