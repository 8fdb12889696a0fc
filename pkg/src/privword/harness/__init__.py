from .report import CheckRecord, VerifyReport
from .suites import SuiteConfig, SuiteContext

__all__ = ["CheckRecord", "SuiteConfig", "SuiteContext", "VerifyReport"]
