import json

import pandas as pd
import streamlit as st

# --- Helpers e Modules ---
from helpers.canonical_json import canonical_dumps
from helpers.errors import SimulatorError
from modules.init_session_state import init_session_state

# --- Simulador ---
from harness import build_config, describe_registers, list_presets, run_experiment, run_preset
from reporting import build_pdf_report, render_plots

st.set_page_config(page_title="Benchmark de Memória HBM/DDR4", layout="wide", initial_sidebar_state="expanded")

init_session_state()

st.title("Benchmark de Memória HBM/DDR4")
st.markdown("---")


def guardar_resultado(artifact):
    st.session_state["summary"] = artifact.summary
    st.session_state["plot_data"] = artifact.plot_data
    st.session_state["sweep_df"] = artifact.sweep
    st.session_state["images"] = render_plots(artifact.plot_data)
    st.session_state["pdf_bytes"] = None
    st.session_state["erro_execucao"] = None


# --- Sidebar ---
with st.sidebar:
    st.header("Configurações")
    presets = dict(list_presets())
    st.session_state["selected_preset"] = st.selectbox(
        "Preset",
        list(presets),
        index=list(presets).index(st.session_state["selected_preset"]),
        format_func=lambda name: f"{name} - {presets[name]}",
    )
    limit = st.number_input("Limite de transações por execução (0 = sem limite)", min_value=0, value=0, step=500)
    st.session_state["max_transactions"] = int(limit) or None
    st.markdown("---")
    st.info("1. Escolha um preset **ou** cole uma configuração JSON.")
    st.info("2. Clique em **Executar**.")
    st.info("3. Veja tabelas, gráficos e baixe os artefatos.")

# --- Seção 1: Execução ---
st.header("1. Execução")
col_preset, col_config = st.columns(2)

with col_preset:
    if st.button("Executar preset"):
        with st.spinner(f"Simulando {st.session_state['selected_preset']}..."):
            try:
                guardar_resultado(
                    run_preset(st.session_state["selected_preset"], max_transactions=st.session_state["max_transactions"])
                )
                st.success("Preset concluído.")
            except SimulatorError as exc:
                st.session_state["erro_execucao"] = exc.to_dict()

with col_config:
    uploaded = st.file_uploader("Configuração JSON", type=["json"])
    if uploaded is not None:
        st.session_state["config_text"] = uploaded.getvalue().decode("utf-8")
    st.session_state["config_text"] = st.text_area("ou cole aqui", value=st.session_state["config_text"], height=200)
    if st.button("Executar configuração"):
        with st.spinner("Simulando..."):
            try:
                cfg = build_config(json.loads(st.session_state["config_text"]))
                guardar_resultado(run_experiment(cfg, max_transactions=st.session_state["max_transactions"]))
                st.success("Experimento concluído.")
            except json.JSONDecodeError as exc:
                st.session_state["erro_execucao"] = {"error": "JSONDecodeError", "message": str(exc), "details": []}
            except SimulatorError as exc:
                st.session_state["erro_execucao"] = exc.to_dict()

if st.session_state["erro_execucao"]:
    st.error(st.session_state["erro_execucao"]["message"])
    st.json(st.session_state["erro_execucao"])

# --- Seção 2: Resultados ---
summary = st.session_state["summary"]
if summary:
    st.markdown("---")
    st.header("2. Resultados")
    if summary.get("results"):
        st.json(summary["results"])
    for item in summary.get("experiments", [summary]):
        if item.get("aggregate"):
            st.subheader(item.get("name") or item["config"]["name"])
            st.dataframe(pd.DataFrame(item["aggregate"]))
    if st.session_state["sweep_df"] is not None:
        st.subheader("Varredura")
        st.dataframe(st.session_state["sweep_df"])

    if st.session_state["images"]:
        st.header("3. Gráficos")
        for name, img_bytes in st.session_state["images"].items():
            st.image(img_bytes, caption=name)

    st.header("4. Downloads")
    st.download_button(
        "summary.json", canonical_dumps(summary), file_name="summary.json", mime="application/json"
    )
    if st.session_state["sweep_df"] is not None:
        st.download_button(
            "sweep.csv",
            st.session_state["sweep_df"].to_csv(index=False, lineterminator="\n"),
            file_name="sweep.csv",
            mime="text/csv",
        )
    if st.button("Gerar relatório PDF"):
        with st.spinner("Montando PDF..."):
            st.session_state["pdf_bytes"] = build_pdf_report(summary, st.session_state["images"])
    if st.session_state["pdf_bytes"]:
        st.download_button("relatorio.pdf", st.session_state["pdf_bytes"], file_name="relatorio.pdf", mime="application/pdf")

with st.expander("Layout do registrador de parâmetros (256 bits)"):
    st.table(pd.DataFrame(describe_registers()))
