import logging
import time
import uuid

logger = logging.getLogger(__name__)


class ProcessLogger:
    """Records named pipeline stages with timings and key=value details."""

    def __init__(self, verbose=False):
        self.logs = {}
        self.verbose = verbose
        self.step_id = uuid.uuid4().hex

    def submit_logs(self, log_message):
        logger.debug(log_message)
        if self.verbose:
            print(log_message)

    def start(self, step_name, **kwargs):
        self.logs[step_name] = {
            "start_time": time.time(),
            "details": dict(kwargs),
        }

    def end(self, step_name, **kwargs):
        if step_name not in self.logs:
            logger.warning(f"stage {step_name} ended without being started")
            return
        end_time = time.time()
        entry = self.logs[step_name]
        entry["end_time"] = end_time
        entry["elapsed_time"] = end_time - entry["start_time"]
        entry["details"].update(kwargs)

        # Format the details as a string delimited by |
        details = '|'.join([f"{key}={value}" for key, value in entry["details"].items()])
        log_message = (
            f"{step_name},{self.step_id},"
            f"{entry['start_time']},{end_time},{entry['elapsed_time']:.3f},{details}"
        )
        self.submit_logs(log_message)

    def timings(self):
        return {name: entry.get("elapsed_time") for name, entry in self.logs.items()}

    def get_logs(self):
        return self.logs
