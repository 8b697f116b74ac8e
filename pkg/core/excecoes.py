# Hierarquia de erros da bancada. O código de domínio levanta essas exceções e a
# camada da CLI transforma em mensagem + exit code 2.


class WorkbenchError(Exception):
    """Erro base de todas as operações da bancada."""


class FormulaSyntaxError(WorkbenchError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (posição {position})")
        self.position = position


class ArityError(WorkbenchError):
    pass


class UnboundVariableError(WorkbenchError):
    pass


class UnknownRelationError(WorkbenchError):
    pass


class InterpretationError(WorkbenchError):
    pass


class TruncationError(WorkbenchError):
    def __init__(self, message: str, required=None):
        if required is not None:
            message = f"{message} (tamanho mínimo necessário: {required})"
        super().__init__(message)
        self.required = required


class GeometryError(WorkbenchError):
    pass


class AntichainError(WorkbenchError):
    pass


class InputFormatError(WorkbenchError):
    pass
