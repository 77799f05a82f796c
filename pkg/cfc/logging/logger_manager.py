import base64
import logging
import sys
import time
import traceback
import uuid

import pandas as pd
import psutil

from cfc.utils.utils import format_seconds_to_hhmmss


class LoggerManager:
    """Run-scoped logger for cfc commands.

    Keeps every message in per-level lists and a step-numbered run log so a
    command can report what happened after the fact, and wraps the timing and
    memory summary around a run.
    """

    def __init__(self, script_name, script_path, process_name=None, level=None):
        self.logger = logging.getLogger(f"cfc.run.{script_name}")
        if level is not None:
            self.logger.setLevel(level)
        self.process_id = str(
            base64.urlsafe_b64encode(uuid.uuid4().bytes).rstrip(b"=").decode("utf-8")
        )
        self.step_id = 0
        self.script_name = script_name
        self.script_path = str(script_path)
        self.process_name = (
            process_name or f"{self.script_path.split('/')[-1]} {self.script_name}"
        )
        self.run_log = []
        self.info_logs = []
        self.data_logs = []
        self.warning_logs = []
        self.error_logs = []
        self.debug_logs = []
        self.start_time = None
        self.end_time = None

    def log(self, level, message):
        if level == "data":
            self.logger.info(message)
            self.data_logs.append(message)
            self.update_run_log("DATA", message)
        elif level == "warning":
            self.logger.warning(message)
            self.warning_logs.append(message)
            self.update_run_log("WARNING", message)
        elif level == "error":
            self.logger.error(message)
            self.error_logs.append(message)
            self.update_run_log("ERROR", message)
        elif level == "debug":
            self.logger.debug(message)
            self.debug_logs.append(message)
            self.update_run_log("DEBUG", message)
        else:
            self.logger.info(message)
            self.info_logs.append(message)
            self.update_run_log("INFO", message)

    def start_timer(self):
        self.start_time = time.time()
        self.update_run_log("In Progress", f"{self.process_name} started")

    def end_timer(self):
        self.end_time = time.time()
        elapsed = self.end_time - self.start_time
        self.update_run_log("Completed", f"{self.process_name} completed")
        self.update_run_log(
            "In Progress",
            f"{self.process_name} took {format_seconds_to_hhmmss(elapsed)}",
        )
        self.generate_performance_summary()
        return elapsed

    def update_run_log(self, status, log_message):
        self.step_id += 1
        self.run_log.append(
            {
                "process_id": self.process_id,
                "task": self.process_name,
                "step": self.step_id,
                "status": status,
                "log_message": log_message,
            }
        )

    def run_log_frame(self):
        """Return the run log as a DataFrame, one row per step."""
        return pd.DataFrame(
            self.run_log,
            columns=["process_id", "task", "step", "status", "log_message"],
        )

    @property
    def succeeded(self):
        return not (self.warning_logs or self.error_logs)

    def display_logs(self, level="all", stream=None):
        stream = stream or sys.stderr
        logs = {
            "info": self.info_logs,
            "data": self.data_logs,
            "warning": self.warning_logs,
            "error": self.error_logs,
            "debug": self.debug_logs,
        }
        if level != "all":
            if level in logs:
                print(f"{level.capitalize()} Logs:", file=stream)
                for log in logs[level]:
                    print(log, file=stream)
            else:
                print("Invalid log level", file=stream)
        else:
            for log_level, log_list in logs.items():
                print(f"\n{log_level.capitalize()} Logs:", file=stream)
                for log in log_list:
                    print(log, file=stream)

    def generate_performance_summary(self):
        total_time = self.end_time - self.start_time
        ram_usage = psutil.virtual_memory().percent
        rss = psutil.Process().memory_info().rss / 1_000_000
        self.logger.info(
            f"Performance Summary: Total Time - {total_time:.3f}s, RAM Usage - {ram_usage}%, RSS - {rss:.1f}MB"
        )

    def log_exceptions(self):
        def handle_exception(exc_type, exc_value, exc_traceback):
            if issubclass(exc_type, KeyboardInterrupt):
                sys.__excepthook__(exc_type, exc_value, exc_traceback)
                return
            error_message = "".join(
                traceback.format_exception(exc_type, exc_value, exc_traceback)
            )
            self.log("error", f"Unhandled exception: {error_message}")

        sys.excepthook = handle_exception
