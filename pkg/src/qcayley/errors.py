class VerificationError(Exception):
    """An independent checker disagreed with a constructed or closed-form result."""
