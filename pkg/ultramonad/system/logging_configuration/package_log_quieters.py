import logging


def suppress_noisy_package_logs():
    # chatty at DEBUG and below
    logging.getLogger("hypothesis").setLevel(logging.WARNING)
    logging.getLogger("numpy").setLevel(logging.WARNING)
