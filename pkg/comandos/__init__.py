# Utilitários compartilhados pelos comandos da CLI.
import functools
import logging

import click

from core.excecoes import WorkbenchError

logger = logging.getLogger(__name__)

# Códigos de saída: 0 tudo passou / verdadeiro, 1 falhas / falso, 2 erro de uso ou de entrada
EXIT_OK = 0
EXIT_FALHA = 1
EXIT_ERRO = 2


def tratar_erros(func):
    """Converte os erros do domínio em mensagem no stderr e exit code 2."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except WorkbenchError as erro:
            logger.debug("comando %s falhou", func.__name__, exc_info=True)
            click.echo(f"erro: {erro}", err=True)
            raise click.exceptions.Exit(EXIT_ERRO)
    return wrapper


def sair(ok: bool) -> None:
    raise click.exceptions.Exit(EXIT_OK if ok else EXIT_FALHA)
