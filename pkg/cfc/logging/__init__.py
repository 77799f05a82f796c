from cfc.logging.logger_manager import LoggerManager

__all__ = ["LoggerManager"]
