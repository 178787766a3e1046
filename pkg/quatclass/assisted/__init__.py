# Assisted mode package
from quatclass.assisted.config import (
    Which, AssistedOrder, AssistedCMOrder, AssistedConfig,
    parse_config_text, load_assisted_config, config_document, validation_to_config_error,
)
from quatclass.assisted.evaluate import AssistedReport, evaluate
from quatclass.assisted.export import export_qsqrtp_config
