import logging

import pytest

from abcs_workbench.tool import Parameter, WBTool, int_list, path_list


def my_sum(a: float, b: float):
    ab = a + b
    print(ab)
    return 0


class SumTool(WBTool):
    name = "Sum tool"
    command = "sum"
    description = "A basic tool to add two numbers together"
    parameters = [
        Parameter(
            name="a",
            dtype=float,
            description="the first number",
            help_text="",
            required=True,
        ),
        Parameter(
            name="b",
            dtype=float,
            description="the second number",
            help_text="",
            required=False,
            default=1.0,
        ),
    ]
    tool_function = my_sum


@pytest.fixture
def tool():
    return SumTool()


def test_check_parameters():
    """Test that the check_parameters method raises an exception when two parameters have the same name."""

    class MyTool(WBTool):
        name = ""
        description = ""
        tool_function = print
        parameters = [
            Parameter(
                name="param1",
                dtype=str,
                description="Description 1",
                help_text="Help text 1",
            ),
            Parameter(
                name="param1",
                dtype=str,
                description="Description 2",
                help_text="Help text 2",
            ),
        ]

    with pytest.raises(ValueError):
        MyTool()


def test_verbose_is_reserved():
    class MyTool(WBTool):
        name = ""
        description = ""
        tool_function = print
        parameters = [Parameter(name="verbose", dtype=bool)]

    with pytest.raises(ValueError):
        MyTool()


def test_run():
    """Test that the run method calls the tool_function method with the correct arguments."""

    class MyTool(WBTool):
        @classmethod
        def tool_function(cls, param1, param2):
            assert param1 == "value1"
            assert param2 == "value2"

    MyTool.run(param1="value1", param2="value2")


def test_missing_name():
    class MyTool(WBTool):
        description = ""
        tool_function = print

    with pytest.raises(NotImplementedError):
        MyTool().name  # noqa: B018


def test_run_from_command_line(tool, capsys):
    assert tool.run_from_command_line(["--a", "2", "--b", "3"]) == 0
    assert capsys.readouterr().out == "5.0\n"
    assert tool.run_from_command_line(["--a", "2"]) == 0
    assert capsys.readouterr().out == "3.0\n"


def test_required_parameter(tool):
    with pytest.raises(SystemExit):
        tool.run_from_command_line(["--b", "3"])


def test_verbose_enables_debug_logging(tool, mocker):
    basic_config = mocker.patch("logging.basicConfig")
    tool.run_from_command_line(["--a", "1", "--verbose"])
    assert basic_config.call_args.kwargs["level"] == logging.DEBUG


def test_bool_parameters_are_flags():
    flag = Parameter("scores", bool)
    assert flag.convert(None) is None
    assert flag.convert(True) is True


def test_list_converters():
    assert int_list("5,10, 20") == (5, 10, 20)
    assert path_list("a.smp, b.smp,") == ["a.smp", "b.smp"]
