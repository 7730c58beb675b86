from .window_report import WindowReport
