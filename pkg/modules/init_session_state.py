import streamlit as st

DEFAULTS = {
    "selected_preset": "table4",
    "max_transactions": None,
    "config_text": "",
    "summary": None,
    "plot_data": {},
    "sweep_df": None,
    "images": {},
    "pdf_bytes": None,
    "erro_execucao": None,
}


def init_session_state():
    for key, value in DEFAULTS.items():
        if key not in st.session_state:
            st.session_state[key] = value
