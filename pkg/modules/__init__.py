from modules.init_session_state import init_session_state, DEFAULTS
