import os

# Carregando as envs do arquivo .env (se existir) para as configurações da bancada
from dotenv import load_dotenv

load_dotenv()

# Tamanho padrão da grade de racionais usada nas suítes de intervalos
DEFAULT_GRID = int(os.getenv("WORKBENCH_GRID", "8"))

# Limite N do truncamento de (N, +)
DEFAULT_BOUND = int(os.getenv("WORKBENCH_BOUND", "30"))

# Tamanho máximo dos subconjuntos quantificados em W(M)
DEFAULT_CAP = int(os.getenv("WORKBENCH_CAP", "6"))

# Quantidade de configurações aleatórias nas suítes de fuzz
DEFAULT_FUZZ = int(os.getenv("WORKBENCH_FUZZ", "200"))

# Semente padrão, para os relatórios serem reproduzíveis
DEFAULT_SEED = int(os.getenv("WORKBENCH_SEED", "7"))

# Nível de log padrão (o --verbose da CLI sobrescreve)
LOG_LEVEL = os.getenv("WORKBENCH_LOG_LEVEL", "WARNING")

# Pasta dos templates Jinja2 dos relatórios em texto
TEMPLATES_DIR = os.getenv(
    "WORKBENCH_TEMPLATES",
    os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "templates"),
)

# Versão do esquema JSON dos relatórios
REPORT_SCHEMA = "workbench-report/1"
