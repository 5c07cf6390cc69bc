"""Request payload models. Domain rules live in the store; these only
pin shapes and primitive types."""
from __future__ import annotations

from datetime import date
from decimal import Decimal

from pydantic import BaseModel


class RegisterRequest(BaseModel):
    username: str
    password: str
    student_number: str
    last_name: str
    first_name: str
    middle_name: str
    address: str
    contact_number: str
    birthdate: date
    course_id: str
    major_id: str | None = None
    terms_accepted: bool = False


class LoginRequest(BaseModel):
    username: str
    password: str


class MajorPayload(BaseModel):
    major_id: str | None = None
    name: str


class CoursePayload(BaseModel):
    name: str
    majors: list[MajorPayload] = []


class ExamPayload(BaseModel):
    name: str
    course_id: str
    exam_date: date
    duration_minutes: int
    passing_rate: Decimal
    # Optional on create: a course's first exam defaults to full weight.
    weight: Decimal | None = None
    instructions: str = ""
    major_id: str | None = None
    reexam_date: date | None = None


class QuestionPayload(BaseModel):
    stem: str
    choices: list[str]
    correct_index: int
    category: str | None = None


class AnnouncementPayload(BaseModel):
    body: str


class StartAttemptRequest(BaseModel):
    exam_id: str


class AnswerPayload(BaseModel):
    choice: int
